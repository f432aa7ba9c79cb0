"""Chebyshev and Morgan-Voyce families, and exact checks of the identities
linking them to the a, b, c, u sequences.

Sequence terms are treated as polynomials in a formal variable w; the
Chebyshev S identities are polynomials in x.  Anything involving sqrt(w)
is evaluated in Z[sqrt(w)] at sample values of w.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Optional

from .exactnum import QuadInt
from .lrs import a_terms, lrs_terms, spec_b, spec_c
from .poly import Poly

X = Poly.x()
ONE = Poly.const(1)

# non-square sample points for the identities that need sqrt(w)
SQRT_SAMPLE_W = (5, 7, 8, 12, 18, 23, 30, 35, 42, 50)


def _two_term(n: int, p0: Poly, p1: Poly, mult: Poly) -> list[Poly]:
    """p_0..p_n of p_{k+1} = mult*p_k - p_{k-1}."""
    out = [p0, p1]
    while len(out) <= n:
        out.append(mult * out[-1] - out[-2])
    return out[: n + 1]


@lru_cache(maxsize=None)
def _family(name: str, n: int) -> tuple[Poly, ...]:
    if name == "T":
        return tuple(_two_term(n, ONE, X, 2 * X))
    if name == "U":
        return tuple(_two_term(n, ONE, 2 * X, 2 * X))
    if name == "S":
        return tuple(_two_term(n, ONE, X, X))
    if name == "f":
        return tuple(_two_term(n, ONE, X + 1, X + 2))
    if name == "g":
        return tuple(_two_term(n, ONE, X + 2, X + 2))
    # sequences as polynomials in w (the variable is still called X)
    if name == "b":
        return tuple(_two_term(n, Poly(), ONE, X - 2))
    if name == "c":
        return tuple(_two_term(n, ONE, X - 1, X - 2))
    if name == "u":
        out = [Poly(), ONE]
        while len(out) <= n:
            out.append((X - 2) * out[-1] - out[-2] + 2)
        return tuple(out[: n + 1])
    if name == "a_sq":
        # order-3 homogeneous form: t^3 - (w-1)t^2 + (w-1)t - 1, init 0, 1, w
        out = [Poly(), ONE, X]
        while len(out) <= n:
            out.append((X - 1) * out[-1] - (X - 1) * out[-2] + out[-3])
        return tuple(out[: n + 1])
    raise ValueError(name)


def _member(name: str) -> Callable[[int], Poly]:
    def get(n: int) -> Poly:
        if n < 0:
            raise ValueError("n must be >= 0")
        return _family(name, max(n, 2))[n]

    get.__name__ = name
    return get


chebyshev_T = _member("T")
chebyshev_U = _member("U")
chebyshev_S = _member("S")
morgan_voyce_f = _member("f")
morgan_voyce_g = _member("g")
b_as_poly = _member("b")
c_as_poly = _member("c")
u_as_poly = _member("u")
a_sq_as_poly = _member("a_sq")


@dataclass
class Counterexample:
    index: int
    lhs: Poly | QuadInt | int
    rhs: Poly | QuadInt | int
    w: Optional[int] = None

    def to_json(self) -> dict:
        def enc(v):
            if isinstance(v, Poly):
                return {"poly": v.to_string(), "coeffs": [str(c) for c in v.coeffs]}
            if isinstance(v, QuadInt):
                return {"rat": str(v.rat), "rad": str(v.rad), "w": v.w}
            return str(v)

        d = {"index": self.index, "lhs": enc(self.lhs), "rhs": enc(self.rhs)}
        if self.w is not None:
            d["w"] = self.w
        return d


@dataclass
class IdentityReport:
    identity: str
    n_max: int
    counterexamples: list[Counterexample] = field(default_factory=list)
    # the f_{n-1} variant of the S_{2n} form is expected to fail
    expected: str = "verified"

    @property
    def status(self) -> str:
        return "counterexample" if self.counterexamples else "verified"

    @property
    def as_expected(self) -> bool:
        return self.status == self.expected

    def to_json(self) -> dict:
        return {
            "identity": self.identity,
            "n_max": self.n_max,
            "status": self.status,
            "expected": self.expected,
            "counterexamples": [c.to_json() for c in self.counterexamples],
        }


def _check(report: IdentityReport, indices, lhs, rhs) -> IdentityReport:
    for n in indices:
        left, right = lhs(n), rhs(n)
        if left != right:
            report.counterexamples.append(Counterexample(n, left, right))
    return report


def verify_uT(n_max: int) -> IdentityReport:
    """(w - 4) u_n(w) == 2 (T_n((w - 2)/2) - 1) for n <= n_max, as polynomials in w."""
    half_shift = Poly([-1, Fraction(1, 2)])  # (w - 2)/2
    return _check(
        IdentityReport("uT", n_max),
        range(n_max + 1),
        lambda n: (X - 4) * u_as_poly(n),
        lambda n: 2 * (chebyshev_T(n).compose(half_shift) - 1),
    )


def verify_S_identities(n_max: int) -> list[IdentityReport]:
    shift = X - 2
    idx = range(1, n_max + 1)
    reports = [
        _check(
            IdentityReport("S.i", n_max), idx,
            b_as_poly, lambda n: chebyshev_S(n - 1).compose(shift),
        ),
        _check(
            IdentityReport("S.ii", n_max), idx,
            c_as_poly,
            lambda n: chebyshev_S(n).compose(shift) + chebyshev_S(n - 1).compose(shift),
        ),
        _check(
            IdentityReport("S.iii", n_max), idx,
            lambda n: chebyshev_S(n) ** 2
            - X * chebyshev_S(n) * chebyshev_S(n - 1)
            + chebyshev_S(n - 1) ** 2,
            lambda n: ONE,
        ),
    ]
    reports.append(_verify_a_vs_S(n_max))
    return reports


def _verify_a_vs_S(n_max: int, sample=SQRT_SAMPLE_W) -> IdentityReport:
    """a_n = S_{n-1}(sqrt w), plus its parity split into b and c, in Z[sqrt(w)]."""
    report = IdentityReport("S.iv", n_max)
    for w in sample:
        a = a_terms(w, 2 * n_max + 2)
        b = lrs_terms(spec_b(w), n_max + 1)
        c = lrs_terms(spec_c(w), n_max + 1)
        r = QuadInt.sqrt(w)
        for n in range(1, n_max + 1):
            checks = [
                (a[n], chebyshev_S(n - 1)(r)),
                (a[2 * n], r * b[n]),
                (a[2 * n + 1], QuadInt.of(c[n], w)),
            ]
            for lhs, rhs in checks:
                if lhs != rhs:
                    report.counterexamples.append(Counterexample(n, lhs, rhs, w=w))
    return report


def verify_MV_identities(n_max: int) -> list[IdentityReport]:
    neg = -X
    neg_sq = -(X * X)
    idx = range(1, n_max + 1)
    sign = lambda k: 1 if k % 2 == 0 else -1  # noqa: E731
    return [
        _check(
            IdentityReport("MV.i", n_max), idx,
            b_as_poly, lambda n: sign(n - 1) * morgan_voyce_g(n - 1).compose(neg),
        ),
        _check(
            IdentityReport("MV.ii", n_max), idx,
            c_as_poly, lambda n: sign(n) * morgan_voyce_f(n).compose(neg),
        ),
        _check(
            IdentityReport("MV.iii", n_max), idx,
            lambda n: chebyshev_S(2 * n - 1),
            lambda n: sign(n - 1) * X * morgan_voyce_g(n - 1).compose(neg_sq),
        ),
        _check(
            IdentityReport("MV.iv", n_max), idx,
            lambda n: chebyshev_S(2 * n),
            lambda n: sign(n) * morgan_voyce_f(n).compose(neg_sq),
        ),
        _check(
            IdentityReport("MV.iv_printed", n_max, expected="counterexample"), idx,
            lambda n: chebyshev_S(2 * n),
            lambda n: sign(n) * morgan_voyce_f(n - 1).compose(neg_sq),
        ),
    ]


def verify_all(n_max: int) -> list[IdentityReport]:
    return [verify_uT(n_max), *verify_S_identities(n_max), *verify_MV_identities(n_max)]
