"""Exact arithmetic in Z[sqrt(w)] for non-square w.

Elements are ``rat + rad*sqrt(w)`` with Python ints, so nothing overflows.
Ordering follows the real embedding and is decided without floating point.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from functools import total_ordering
from typing import Optional, Union

from .errors import RingMismatchError, SquareParameterError

IntLike = Union[int, "QuadInt"]


def is_perfect_square(n: int) -> Optional[int]:
    """Return r with r*r == n, or None if n is not a square."""
    if n < 0:
        raise ValueError(f"expected n >= 0, got {n}")
    r = math.isqrt(n)
    return r if r * r == n else None


def _check_w(w: int) -> None:
    if not isinstance(w, int) or w < 4:
        raise ValueError(f"w must be an integer >= 4, got {w!r}")
    if is_perfect_square(w) is not None:
        raise SquareParameterError(f"w={w} is a perfect square; use the integer code path")


@total_ordering
@dataclass(frozen=True)
class QuadInt:
    rat: int
    rad: int
    w: int

    def __post_init__(self):
        _check_w(self.w)
        if not (isinstance(self.rat, int) and isinstance(self.rad, int)):
            raise TypeError("QuadInt components must be int")

    @classmethod
    def sqrt(cls, w: int) -> QuadInt:
        return cls(0, 1, w)

    @classmethod
    def of(cls, n: int, w: int) -> QuadInt:
        return cls(n, 0, w)

    def _coerce(self, other) -> QuadInt:
        if isinstance(other, QuadInt):
            if other.w != self.w:
                raise RingMismatchError(f"cannot combine sqrt({self.w}) with sqrt({other.w})")
            return other
        if isinstance(other, int):
            return QuadInt(other, 0, self.w)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return QuadInt(self.rat + other.rat, self.rad + other.rad, self.w)

    __radd__ = __add__

    def __neg__(self):
        return QuadInt(-self.rat, -self.rad, self.w)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return QuadInt(self.rat - other.rat, self.rad - other.rad, self.w)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b, c, d = self.rat, self.rad, other.rat, other.rad
        return QuadInt(a * c + b * d * self.w, a * d + b * c, self.w)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative powers are not closed in Z[sqrt(w)]")
        result = QuadInt(1, 0, self.w)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def conj(self) -> QuadInt:
        return QuadInt(self.rat, -self.rad, self.w)

    def norm(self) -> int:
        return self.rat * self.rat - self.w * self.rad * self.rad

    def sign(self) -> int:
        """Sign of the real number rat + rad*sqrt(w)."""
        p, q = self.rat, self.rad
        if p >= 0 and q >= 0:
            return 0 if p == 0 and q == 0 else 1
        if p <= 0 and q <= 0:
            return -1
        # mixed signs: the larger of p^2 and w*q^2 wins (they never tie, w non-square)
        if p > 0:
            return 1 if p * p > self.w * q * q else -1
        return 1 if self.w * q * q > p * p else -1

    def is_integer(self) -> bool:
        return self.rad == 0

    def __eq__(self, other):
        if isinstance(other, int):
            return self.rad == 0 and self.rat == other
        if isinstance(other, QuadInt):
            return (self.rat, self.rad, self.w) == (other.rat, other.rad, other.w)
        return NotImplemented

    def __hash__(self):
        if self.rad == 0:
            return hash(self.rat)
        return hash((self.rat, self.rad, self.w))

    def __lt__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return (self - other).sign() < 0

    def __float__(self):
        return self.rat + self.rad * math.sqrt(self.w)

    def __str__(self):
        return format_quadint(self)

    def __repr__(self):
        return f"QuadInt({self.rat}, {self.rad}, w={self.w})"


def _same_w(x: QuadInt, y: QuadInt) -> None:
    if x.w != y.w:
        raise RingMismatchError(f"cannot combine sqrt({x.w}) with sqrt({y.w})")


def qi_add(x: QuadInt, y: QuadInt) -> QuadInt:
    _same_w(x, y)
    return x + y


def qi_mul(x: QuadInt, y: QuadInt) -> QuadInt:
    _same_w(x, y)
    return x * y


def qi_cmp(x: QuadInt, y: QuadInt) -> int:
    """-1, 0 or 1 as x is less than, equal to or greater than y."""
    _same_w(x, y)
    return (x - y).sign()


def format_quadint(x: QuadInt) -> str:
    """Render as ``p+q*sqrt(w)``, dropping zero parts and unit coefficients."""
    if x.rad == 0:
        return str(x.rat)
    if x.rad == 1:
        rad = f"sqrt({x.w})"
    elif x.rad == -1:
        rad = f"-sqrt({x.w})"
    else:
        rad = f"{x.rad}*sqrt({x.w})"
    if x.rat == 0:
        return rad
    return f"{x.rat}{rad}" if rad.startswith("-") else f"{x.rat}+{rad}"


_QI_RE = re.compile(
    r"""^\s*
    (?:(?P<rat>[+-]?\d+)(?=\s*[+-]|\s*$))?      # rational part
    \s*
    (?:(?P<coef>[+-]?\s*\d*)\s*\*?\s*sqrt\(\s*(?P<w>\d+)\s*\))?
    \s*$""",
    re.VERBOSE,
)


def parse_quadint(text: str, w: Optional[int] = None) -> QuadInt:
    """Inverse of :func:`format_quadint`.

    A bare integer needs ``w`` to be given; otherwise w is read from sqrt(...).
    """
    m = _QI_RE.match(text)
    if not m or (m.group("rat") is None and m.group("w") is None):
        raise ValueError(f"cannot parse {text!r} as p+q*sqrt(w)")
    rat = int(m.group("rat")) if m.group("rat") is not None else 0
    rad = 0
    if m.group("w") is not None:
        coef = m.group("coef").replace(" ", "")
        rad = int(coef + "1") if coef in ("", "+", "-") else int(coef)
        text_w = int(m.group("w"))
        if w is not None and w != text_w:
            raise RingMismatchError(f"text names sqrt({text_w}) but w={w} was expected")
        w = text_w
    if w is None:
        raise ValueError(f"{text!r} has no sqrt(...) part; pass w explicitly")
    return QuadInt(rat, rad, w)
