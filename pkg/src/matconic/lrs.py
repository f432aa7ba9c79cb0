"""Integer linear recurrences and the a, b, c, u sequences.

A spec with coefficients ``f_1..f_m`` and constant ``k`` generates

    q_n = f_1*q_{n-1} + ... + f_m*q_{n-m} + k        (n >= m)

so its characteristic polynomial (for k = 0) is t^m - f_1 t^{m-1} - ... - f_m.
All indices are 0-based.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Literal, Sequence

from .errors import SquareParameterError
from .exactnum import QuadInt, is_perfect_square
from .poly import Poly

SeqName = Literal["a", "b", "c", "u"]


@dataclass(frozen=True)
class LrsSpec:
    coeffs: tuple[int, ...]
    initial: tuple[int, ...]
    additive_const: int = 0

    def __post_init__(self):
        object.__setattr__(self, "coeffs", tuple(self.coeffs))
        object.__setattr__(self, "initial", tuple(self.initial))
        if not self.coeffs:
            raise ValueError("order must be positive")
        if len(self.initial) != len(self.coeffs):
            raise ValueError(
                f"need {len(self.coeffs)} initial terms, got {len(self.initial)}"
            )

    @property
    def order(self) -> int:
        return len(self.coeffs)


def lrs_terms(spec: LrsSpec, count: int) -> list[int]:
    if count < 0:
        raise ValueError("count must be >= 0")
    terms = list(spec.initial[:count])
    m, f, k = spec.order, spec.coeffs, spec.additive_const
    while len(terms) < count:
        n = len(terms)
        terms.append(sum(f[h] * terms[n - 1 - h] for h in range(m)) + k)
    return terms


def char_poly(spec: LrsSpec) -> Poly:
    """Characteristic polynomial of the homogeneous part of ``spec``."""
    m = spec.order
    coeffs = [0] * (m + 1)
    coeffs[m] = 1
    for h, fh in enumerate(spec.coeffs, start=1):
        coeffs[m - h] = -fh
    return Poly(coeffs)


def spec_from_char_poly(f: Poly, initial: Sequence[int]) -> LrsSpec:
    if not f.is_monic() or f.degree < 1:
        raise ValueError(f"expected a monic polynomial of degree >= 1, got {f}")
    c = f.int_coeffs()
    m = f.degree
    return LrsSpec(tuple(-c[m - h] for h in range(1, m + 1)), tuple(initial))


def annihilates(f: Poly, terms: Sequence[int]) -> bool:
    """True if every window of ``terms`` satisfies the recurrence given by ``f``."""
    c = f.coeffs
    m = f.degree
    return all(
        sum(c[i] * terms[n + i] for i in range(m + 1)) == 0
        for n in range(len(terms) - m)
    )


def _check_w(w: int) -> None:
    if not isinstance(w, int) or w < 4:
        raise ValueError(f"w must be an integer >= 4, got {w!r}")


def spec_b(w: int) -> LrsSpec:
    _check_w(w)
    return LrsSpec((w - 2, -1), (0, 1))


def spec_c(w: int) -> LrsSpec:
    _check_w(w)
    return LrsSpec((w - 2, -1), (1, w - 1))


def spec_u(w: int) -> LrsSpec:
    _check_w(w)
    return LrsSpec((w - 2, -1), (0, 1), additive_const=2)


def spec_a_integer(k: int) -> LrsSpec:
    """a-sequence for square w = k*k, where sqrt(w) = k is an integer."""
    return LrsSpec((k, -1), (0, 1))


_SPECS = {"b": spec_b, "c": spec_c, "u": spec_u}


def terms(which: SeqName, w: int, count: int) -> list:
    """First ``count`` terms of a, b, c or u.

    For ``a`` the terms are QuadInts when w is non-square and ints otherwise.
    """
    if which == "a":
        k = is_perfect_square(w)
        if k is not None:
            _check_w(w)
            return lrs_terms(spec_a_integer(k), count)
        return a_terms(w, count)
    return lrs_terms(_SPECS[which](w), count)


def a_terms(w: int, count: int) -> list[QuadInt]:
    """a_0..a_{count-1} in Z[sqrt(w)] via a_{n+1} = sqrt(w)*a_n - a_{n-1}."""
    if is_perfect_square(w) is not None:
        raise SquareParameterError(f"w={w} is square; a_n is an integer sequence there")
    r = QuadInt.sqrt(w)
    out = [QuadInt(0, 0, w), QuadInt(1, 0, w)][:count]
    while len(out) < count:
        out.append(r * out[-1] - out[-2])
    return out


def seq_a(w: int, n: int) -> QuadInt:
    return a_terms(w, n + 1)[n]


def seq_b(w: int, n: int) -> int:
    return lrs_terms(spec_b(w), n + 1)[n]


def seq_c(w: int, n: int) -> int:
    return lrs_terms(spec_c(w), n + 1)[n]


def seq_u(w: int, n: int) -> int:
    return lrs_terms(spec_u(w), n + 1)[n]


@dataclass(frozen=True)
class QuadMatrix2:
    """2x2 matrix ((a, b), (c, d)) over Z[sqrt(w)]."""

    a: QuadInt
    b: QuadInt
    c: QuadInt
    d: QuadInt

    def __matmul__(self, o: QuadMatrix2) -> QuadMatrix2:
        return QuadMatrix2(
            self.a * o.a + self.b * o.c,
            self.a * o.b + self.b * o.d,
            self.c * o.a + self.d * o.c,
            self.c * o.b + self.d * o.d,
        )

    def det(self) -> QuadInt:
        return self.a * self.d - self.b * self.c

    def entries(self) -> tuple[QuadInt, QuadInt, QuadInt, QuadInt]:
        return (self.a, self.b, self.c, self.d)


def matrix_M(w: int) -> QuadMatrix2:
    return QuadMatrix2(
        QuadInt(0, 0, w), QuadInt(1, 0, w), QuadInt(-1, 0, w), QuadInt.sqrt(w)
    )


def matrix_M_power(w: int, n: int) -> QuadMatrix2:
    """M^n by repeated squaring; equals ((-a_{n-1}, a_n), (-a_n, a_{n+1}))."""
    if n < 1:
        raise ValueError("n must be >= 1")
    base = matrix_M(w)
    result = None
    while n:
        if n & 1:
            result = base if result is None else result @ base
        n >>= 1
        if n:
            base = base @ base
    return result


def absorb_constant(spec: LrsSpec) -> LrsSpec:
    """Homogeneous order-(m+1) spec with char poly (t-1)f(t) generating the same terms."""
    if spec.additive_const == 0:
        raise ValueError("spec has no additive constant to absorb")
    f = spec.coeffs
    m = spec.order
    g = [1 + f[0]] + [f[h] - f[h - 1] for h in range(1, m)] + [-f[m - 1]]
    return LrsSpec(tuple(g), tuple(lrs_terms(spec, m + 1)))


def _companion(f: Poly) -> list[list[Fraction]]:
    """Companion matrix whose characteristic polynomial is the monic ``f``."""
    m = f.degree
    c = f.coeffs
    mat = [[Fraction(0)] * m for _ in range(m)]
    for i in range(m - 1):
        mat[i][i + 1] = Fraction(1)
    for j in range(m):
        mat[m - 1][j] = -c[j]
    return mat


def _kron(A, B):
    p, q = len(A), len(B)
    out = [[Fraction(0)] * (p * q) for _ in range(p * q)]
    for i in range(p):
        for j in range(p):
            if A[i][j] == 0:
                continue
            for k in range(q):
                for l in range(q):
                    out[i * q + k][j * q + l] = A[i][j] * B[k][l]
    return out


def _matmul(A, B):
    n = len(A)
    Bt = list(zip(*B))
    return [[sum(a * b for a, b in zip(row, col)) for col in Bt] for row in A]


def matrix_char_poly(A: list[list[Fraction]]) -> Poly:
    """det(tI - A) by the Faddeev-LeVerrier recursion over the rationals."""
    n = len(A)
    c = [Fraction(0)] * (n + 1)
    c[n] = Fraction(1)
    Mk = [[Fraction(0)] * n for _ in range(n)]
    for k in range(1, n + 1):
        AM = _matmul(A, Mk)
        Mk = [
            [AM[i][j] + (c[n - k + 1] if i == j else 0) for j in range(n)]
            for i in range(n)
        ]
        AMk = _matmul(A, Mk)
        c[n - k] = -sum(AMk[i][i] for i in range(n)) / k
    return Poly(c)


def kronecker_char_poly(f: Poly, g: Poly) -> Poly:
    """Characteristic polynomial of companion(f) (x) companion(g).

    It annihilates the termwise product of any sequence recurring with f and
    any sequence recurring with g.
    """
    for p in (f, g):
        if p.degree < 1 or not p.is_monic():
            raise ValueError(f"expected a monic polynomial of degree >= 1, got {p}")
    return matrix_char_poly(_kron(_companion(f), _companion(g)))
