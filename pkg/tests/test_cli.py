import io
import json
import subprocess
import sys
from pathlib import Path

import pytest

from matconic.cli import run

GOLDEN = Path(__file__).parent / "golden"
COMMANDS = [
    line.split("\t")
    for line in (GOLDEN / "commands.txt").read_text().splitlines()
    if line.strip()
]


def invoke(argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(argv, out=out, err=err)
    return code, out.getvalue(), err.getvalue()


@pytest.mark.parametrize("name, cmd", COMMANDS, ids=[c[0] for c in COMMANDS])
def test_golden_output(name, cmd):
    code, out, _ = invoke(cmd.split())
    assert code == 0
    assert out == (GOLDEN / name).read_text()


def test_output_is_byte_identical_across_processes():
    argv = [sys.executable, "-m", "matconic", "oracle", "--conic", "C", "--w", "7", "--bound", "500"]
    first = subprocess.run(argv, capture_output=True, check=True).stdout
    second = subprocess.run(argv, capture_output=True, check=True).stdout
    assert first == second and first


def test_seq_csv_example():
    code, out, _ = invoke(["seq", "--which", "u", "--w", "5", "--count", "6", "--format", "csv"])
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "n,u"
    assert [row.split(",")[1] for row in lines[1:]] == ["0", "1", "5", "16", "45", "121"]


def test_points_json_lines():
    code, out, _ = invoke(["points", "--w", "5", "--count", "3", "--format", "json"])
    recs = [json.loads(line) for line in out.splitlines()]
    assert len(recs) == 3
    assert recs[-1]["x"] == {"rat": "4", "rad": "0", "w": 5}
    assert recs[-1]["y"] == {"rat": "0", "rad": "1", "w": 5}
    assert {"conic", "w", "n", "x", "y", "side"} <= set(recs[0])


def test_big_integers_are_strings():
    code, out, _ = invoke(["seq", "--which", "b", "--w", "20", "--count", "40"])
    terms = json.loads(out)["terms"]
    assert all(isinstance(t, str) for t in terms)
    assert int(terms[-1]) > 2**63


def test_verify_exit_codes():
    assert invoke(["verify", "--identity", "uT", "--n-max", "30"])[0] == 0
    # the printed even-index form fails as expected, so the suite still exits 0
    code, out, _ = invoke(["verify", "--identity", "all", "--n-max", "5"])
    assert code == 0
    statuses = {json.loads(l)["identity"]: json.loads(l)["status"] for l in out.splitlines()}
    assert statuses["MV.iv_printed"] == "counterexample"
    assert statuses["uT"] == "verified"


def test_verify_mismatch_exits_1(monkeypatch):
    import matconic.polyid as pid

    real = pid.c_as_poly
    monkeypatch.setattr(pid, "c_as_poly", lambda n: real(n) + (n == 2))
    assert invoke(["verify", "--identity", "S", "--n-max", "3"])[0] == 1


def test_oeis_mismatch_exits_1(monkeypatch):
    import matconic.oeis as oe

    real = oe.load_fixture

    def tampered(anum):
        fx = real(anum)
        fx.terms[1] += 1
        return fx

    monkeypatch.setattr(oe, "load_fixture", tampered)
    assert invoke(["oeis-check", "--w", "6", "--count", "5"])[0] == 1


@pytest.mark.parametrize(
    "argv",
    [
        [],
        ["bogus"],
        ["seq", "--which", "q", "--w", "5", "--count", "3"],
        ["seq", "--which", "u", "--w", "3", "--count", "3"],
        ["points", "--w", "5", "--count", "0"],
        ["verify", "--identity", "uT", "--format", "csv"],
    ],
)
def test_usage_errors_exit_2(argv):
    assert invoke(argv)[0] == 2


@pytest.mark.parametrize(
    "argv",
    [
        ["oracle", "--conic", "C", "--w", "9", "--bound", "10"],
        ["oeis-check", "--w", "12", "--count", "5"],
        ["oeis-check", "--w", "5", "--count", "45"],
    ],
)
def test_domain_errors_exit_1(argv):
    code, out, err = invoke(argv)
    assert code == 1
    assert out == ""
    assert err.startswith(f"matconic {argv[0]}:")


def test_fetch_offline_exit_1(monkeypatch):
    import matconic.oeis as oe

    def boom(url, timeout):
        raise oe.urllib.error.URLError("no route")

    monkeypatch.setattr(oe.urllib.request, "urlopen", boom)
    monkeypatch.setattr(oe, "_fetched", {})
    code, _, err = invoke(["oeis-check", "--w", "5", "--count", "3", "--fetch"])
    assert code == 1 and "no route" in err
