"""Table 1 cross-checks against OEIS b-file fixtures.

b-files are plain text, one ``index value`` pair per line, ``#`` comments
allowed.  Fixtures for w = 4..11 ship in ``matconic/data``.
"""

from __future__ import annotations

import os
import re
import urllib.error
import urllib.request
from dataclasses import dataclass, field
from importlib import resources
from typing import Optional

from .errors import BFileParseError, MissingFixtureError, OfflineError
from .lrs import terms as seq_terms

A_NUMBER_RE = re.compile(r"^A\d{6}$")
NETWORK_ENV = "MATCONIC_ALLOW_NETWORK"


@dataclass
class BFileFixture:
    a_number: Optional[str]
    offset: int
    terms: list[int] = field(default_factory=list)

    def term(self, index: int) -> int:
        return self.terms[index - self.offset]


def parse_bfile(text: str, a_number: Optional[str] = None) -> BFileFixture:
    offset = None
    values: list[int] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            if a_number is None:
                m = re.search(r"\bA\d{6}\b", line)
                if m:
                    a_number = m.group(0)
            continue
        parts = line.split()
        if len(parts) != 2:
            raise BFileParseError(lineno, raw, "expected 'index value'")
        try:
            idx, val = int(parts[0]), int(parts[1])
        except ValueError:
            raise BFileParseError(lineno, raw, "non-integer field") from None
        if offset is None:
            offset = idx
        elif idx != offset + len(values):
            raise BFileParseError(lineno, raw, f"index {idx} breaks contiguity")
        values.append(val)
    return BFileFixture(a_number, 0 if offset is None else offset, values)


def render_bfile(fx: BFileFixture, comment: Optional[str] = None) -> str:
    lines = [f"# {comment}"] if comment else []
    lines += [f"{fx.offset + i} {v}" for i, v in enumerate(fx.terms)]
    return "\n".join(lines) + "\n"


def load_fixture(a_number: str) -> BFileFixture:
    _validate(a_number)
    name = f"b{a_number[1:]}.txt"
    try:
        text = resources.files("matconic.data").joinpath(name).read_text()
    except FileNotFoundError:
        raise MissingFixtureError(f"no bundled fixture for {a_number}") from None
    return parse_bfile(text, a_number=a_number)


def _validate(a_number: str) -> None:
    if not A_NUMBER_RE.match(a_number):
        raise ValueError(f"not an A-number: {a_number!r}")


_fetched: dict[str, str] = {}


def fetch_bfile(a_number: str, allow_network: Optional[bool] = None, timeout: float = 30) -> str:
    """Download ``https://oeis.org/Annnnnn/bnnnnnn.txt``.

    Network use must be enabled by ``allow_network=True`` or by setting
    MATCONIC_ALLOW_NETWORK=1.  Each A-number is fetched at most once per process.
    """
    _validate(a_number)
    if allow_network is None:
        allow_network = os.environ.get(NETWORK_ENV, "") not in ("", "0")
    if not allow_network:
        raise OfflineError(f"network disabled; pass --fetch or set {NETWORK_ENV}=1")
    if a_number in _fetched:
        return _fetched[a_number]
    url = f"https://oeis.org/{a_number}/b{a_number[1:]}.txt"
    try:
        with urllib.request.urlopen(url, timeout=timeout) as resp:
            if resp.status != 200:
                raise OSError(f"HTTP {resp.status} for {url}")
            text = resp.read().decode("utf-8")
    except urllib.error.URLError as e:
        raise OSError(f"fetching {url}: {e}") from e
    _fetched[a_number] = text
    return text


@dataclass(frozen=True)
class Alignment:
    """fixture term at OEIS index i corresponds to sequence index i - offset + shift."""

    shift: int = 0
    note: str = ""


@dataclass(frozen=True)
class Table1Row:
    w: int
    u_ref: str
    b_ref: str
    c_ref: str
    u_align: Alignment = Alignment()
    b_align: Alignment = Alignment()
    c_align: Alignment = Alignment()

    def refs(self) -> dict[str, tuple[str, Alignment]]:
        return {
            "u": (self.u_ref, self.u_align),
            "b": (self.b_ref, self.b_align),
            "c": (self.c_ref, self.c_align),
        }


_SHIFT1 = Alignment(1, "shifted by one: fixture term k is u_{k+1}")

TABLE1 = {
    r.w: r
    for r in [
        Table1Row(4, "A000290", "A001477", "A005408"),
        Table1Row(5, "A004146", "A001906", "A002878"),
        Table1Row(6, "A092184", "A001353", "A001834"),
        Table1Row(7, "A054493", "A004254", "A030221", u_align=_SHIFT1),
        Table1Row(8, "A001108", "A001109", "A002315"),
        Table1Row(9, "A049684", "A004187", "A033890"),
        Table1Row(10, "A095004", "A001090", "A057080", u_align=_SHIFT1),
        Table1Row(11, "A098296", "A018913", "A057081"),
    ]
}


def compare_to_fixture(generated: list[int], fx: BFileFixture, align: Alignment, count: int) -> dict:
    """Compare the first ``count`` fixture terms with the aligned generated terms."""
    if len(fx.terms) < count:
        raise MissingFixtureError(f"{fx.a_number} has only {len(fx.terms)} terms, need {count}")
    expected = fx.terms[:count]
    got = generated[align.shift : align.shift + count]
    mismatch = next((i for i, (a, b) in enumerate(zip(got, expected)) if a != b), None)
    return {
        "a_number": fx.a_number,
        "shift": align.shift,
        "match": mismatch is None,
        "first_mismatch": None if mismatch is None else fx.offset + mismatch,
        "generated": [str(t) for t in got],
        "reference": [str(t) for t in expected],
    }


def check_table1(w: int, count: int, fetch: bool = False) -> dict:
    """Generate u, b, c for ``w`` and compare each with its Table 1 reference."""
    if w not in TABLE1:
        raise MissingFixtureError(f"Table 1 has no row for w={w} (bundled rows: 4..11)")
    if count < 1:
        raise ValueError("count must be >= 1")
    row = TABLE1[w]
    report = {"w": w, "count": count, "sequences": {}}
    for which, (anum, align) in row.refs().items():
        if fetch:
            fx = parse_bfile(fetch_bfile(anum, allow_network=True), a_number=anum)
        else:
            fx = load_fixture(anum)
        generated = seq_terms(which, w, count + align.shift)
        report["sequences"][which] = compare_to_fixture(generated, fx, align, count)
    report["match"] = all(s["match"] for s in report["sequences"].values())
    return report
