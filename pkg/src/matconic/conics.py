"""Points on the conics C(w), C2(w), C3(w).

    C(w):  x^2 - sqrt(w)*x*y + y^2 = 1
    C2(w): (x + y - 1)^2 = w*x*y
    C3(w): (x + y)^2 = w*(x + 1)*(y + 1)

Generators build points from the recurrences in :mod:`matconic.lrs`; the
``oracle_*`` functions find them by exhaustive search without using any
recurrence, so the two can be compared.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Literal, Optional, Union

from .errors import DescentError, NotOnConicError, RingMismatchError, SquareParameterError
from .exactnum import QuadInt, is_perfect_square
from .lrs import a_terms, lrs_terms, spec_a_integer, spec_u

ConicName = Literal["C", "C2", "C3"]
Coord = Union[int, QuadInt]


def _w_of(*vals) -> Optional[int]:
    ws = {v.w for v in vals if isinstance(v, QuadInt)}
    if len(ws) > 1:
        raise RingMismatchError(f"coordinates from different rings: {sorted(ws)}")
    return ws.pop() if ws else None


def on_conic(conic: ConicName, w: int, x: Coord, y: Coord) -> bool:
    """Exact membership test.

    For C with non-square w the coordinates are QuadInts (ints are promoted);
    for square w, and always for C2/C3, they are plain ints.
    """
    qw = _w_of(x, y)
    if qw is not None and qw != w:
        raise RingMismatchError(f"coordinates live in Z[sqrt({qw})], conic has w={w}")
    if conic == "C":
        k = is_perfect_square(w)
        if k is not None:
            return x * x - k * x * y + y * y == 1
        s = QuadInt.sqrt(w)
        return x * x - s * x * y + y * y == 1
    if qw is not None:
        raise TypeError(f"{conic} takes integer coordinates")
    if conic == "C2":
        return (x + y - 1) ** 2 == w * x * y
    if conic == "C3":
        return (x + y) ** 2 == w * (x + 1) * (y + 1)
    raise ValueError(f"unknown conic {conic!r}")


@dataclass(frozen=True)
class RadicalPointClass:
    """L: the point (u*sqrt(w), v) with u*sqrt(w) > v.
    R: the point (u, v*sqrt(w)) with u > v*sqrt(w)."""

    side: Literal["L", "R"]
    u: int
    v: int

    def point(self, w: int) -> tuple[QuadInt, QuadInt]:
        if self.side == "L":
            return QuadInt(0, self.u, w), QuadInt(self.v, 0, w)
        return QuadInt(self.u, 0, w), QuadInt(0, self.v, w)


@dataclass(frozen=True)
class ConicPoint:
    x: Coord
    y: Coord
    conic: ConicName
    w: int
    n: Optional[int] = None  # None means found by an oracle
    side: Optional[Literal["L", "R"]] = None

    def __post_init__(self):
        if not on_conic(self.conic, self.w, self.x, self.y):
            raise NotOnConicError(f"({self.x}, {self.y}) is not on {self.conic}({self.w})")

    @property
    def provenance(self) -> str:
        return "oracle" if self.n is None else f"n={self.n}"


def classify(x: QuadInt, y: QuadInt) -> Optional[RadicalPointClass]:
    """L/R class of a radical point, or None if (x, y) is not of radical shape."""
    if x.rat == 0 and y.rad == 0 and x.rad > 0 and y.rat >= 0 and x > y:
        return RadicalPointClass("L", x.rad, y.rat)
    if x.rad == 0 and y.rat == 0 and x.rat > 0 and y.rad >= 0 and x > y:
        return RadicalPointClass("R", x.rat, y.rad)
    return None


def radical_points(w: int, count: int) -> list[ConicPoint]:
    """P_1..P_count with P_n = (a_n, a_{n-1}), tagged with their L/R side."""
    if count < 1:
        raise ValueError("count must be >= 1")
    if is_perfect_square(w) is not None:
        raise SquareParameterError(f"w={w} is square; use integer_points_C")
    a = a_terms(w, count + 1)
    out = []
    for n in range(1, count + 1):
        cls = classify(a[n], a[n - 1])
        out.append(ConicPoint(a[n], a[n - 1], "C", w, n=n, side=cls.side))
    return out


def integer_points_C(w: int, count: int) -> list[ConicPoint]:
    """Square w = k^2: the integer points (a_n, a_{n-1}) of x^2 - kxy + y^2 = 1."""
    k = is_perfect_square(w)
    if k is None:
        raise ValueError(f"w={w} is not a perfect square")
    a = lrs_terms(spec_a_integer(k), count + 1)
    return [ConicPoint(a[n], a[n - 1], "C", w, n=n) for n in range(1, count + 1)]


def _int_roots(a: int, b: int, c: int) -> list[int]:
    """Integer roots of a*t^2 + b*t + c (a > 0), ascending."""
    disc = b * b - 4 * a * c
    if disc < 0:
        return []
    r = is_perfect_square(disc)
    if r is None:
        return []
    roots = set()
    for num in (-b - r, -b + r):
        if num % (2 * a) == 0:
            roots.add(num // (2 * a))
    return sorted(roots)


def oracle_radical_points(w: int, bound: int) -> list[RadicalPointClass]:
    """Every radical point with 1 <= u <= bound and 0 <= v <= bound*ceil(sqrt(w)).

    For each u the conic equation is a quadratic in v, so all v in the scan
    window are found by exact root extraction instead of an inner loop.
    Ordered by u, then v, then side.
    """
    if bound < 1:
        raise ValueError("bound must be >= 1")
    if is_perfect_square(w) is not None:
        raise SquareParameterError(f"w={w} is square")
    vmax = bound * (math.isqrt(w - 1) + 1)
    found = []
    for u in range(1, bound + 1):
        # L: w*u^2 + v^2 - w*u*v = 1
        for v in _int_roots(1, -w * u, w * u * u - 1):
            if 0 <= v <= vmax and v * v < w * u * u:
                found.append(RadicalPointClass("L", u, v))
        # R: u^2 + w*v^2 - w*u*v = 1
        for v in _int_roots(w, -w * u, u * u - 1):
            if 0 <= v <= vmax and u * u > w * v * v:
                found.append(RadicalPointClass("R", u, v))
    found.sort(key=lambda p: (p.u, p.v, p.side))
    return found


def oracle_radical_points_naive(w: int, bound: int) -> list[RadicalPointClass]:
    """Double loop over the same window as :func:`oracle_radical_points`."""
    vmax = bound * (math.isqrt(w - 1) + 1)
    found = []
    for u in range(1, bound + 1):
        for v in range(vmax + 1):
            if w * u * u + v * v - w * u * v == 1 and v * v < w * u * u:
                found.append(RadicalPointClass("L", u, v))
            if u * u + w * v * v - w * u * v == 1 and u * u > w * v * v:
                found.append(RadicalPointClass("R", u, v))
    found.sort(key=lambda p: (p.u, p.v, p.side))
    return found


def truncate_classes(points: Iterable[ConicPoint], bound: int) -> list[RadicalPointClass]:
    """Generated points whose class has u <= bound, in oracle order."""
    out = []
    for p in points:
        cls = classify(p.x, p.y)
        if cls is not None and cls.u <= bound:
            out.append(cls)
    out.sort(key=lambda c: (c.u, c.v, c.side))
    return out


def radical_points_upto(w: int, bound: int) -> list[ConicPoint]:
    """Generate P_1, P_2, ... until the class coordinate u exceeds ``bound``."""
    pts: list[ConicPoint] = []
    count = 8
    while True:
        pts = radical_points(w, count)
        last = classify(pts[-1].x, pts[-1].y)
        prev = classify(pts[-2].x, pts[-2].y)
        # u grows along each side, so two overshoots settle it
        if last.u > bound and prev.u > bound:
            return pts
        count *= 2


def solve_C2(w: int, count: int) -> list[tuple[int, int]]:
    """(u_{n+1}, u_n) for n = 0..count-1; (1, 0) is the ladder seed."""
    if count < 1:
        raise ValueError("count must be >= 1")
    u = lrs_terms(spec_u(w), count + 1)
    return [(u[n + 1], u[n]) for n in range(count)]


def solve_C2_upto(w: int, bound: int) -> list[tuple[int, int]]:
    """Positive ladder pairs (y >= 1) with x <= bound."""
    out = []
    u_prev, u = 0, 1
    while True:
        u_next = (w - 2) * u - u_prev + 2
        if u_next > bound:
            return out
        out.append((u_next, u))
        u_prev, u = u, u_next


def solve_C3(w: int, count: int) -> list[tuple[int, int]]:
    """Images of the C2 ladder under (x, y) -> (2x - 1, 2y - 1)."""
    return [map_C2_to_C3(x, y) for x, y in solve_C2(w, count)]


def _spf_sieve(n: int) -> list[int]:
    spf = list(range(n + 1))
    for p in range(2, math.isqrt(n) + 1):
        if spf[p] == p:
            for q in range(p * p, n + 1, p):
                if spf[q] == q:
                    spf[q] = p
    return spf


def _square_divisors_in(m: int, lo: int, hi: int, spf: list[int]) -> list[int]:
    """Divisors d of m^2 with lo <= d <= hi."""
    fac: dict[int, int] = {}
    while m > 1:
        p = spf[m]
        fac[p] = fac.get(p, 0) + 2
        m //= p
    divs = [1]
    for p, e in fac.items():
        new = []
        for d in divs:
            pk = d
            for _ in range(e + 1):
                if pk > hi:
                    break
                new.append(pk)
                pk *= p
        divs = new
    return [d for d in divs if d >= lo]


def oracle_C2_many(ws: Iterable[int], bound: int) -> dict[int, list[tuple[int, int]]]:
    """All positive (x, y) with bound >= x >= y >= 1 on C2(w), for every w in ``ws``.

    Uses x | (y-1)^2: each y contributes only the divisors of (y-1)^2 as x
    candidates, and each candidate is tested against the equation directly.
    """
    wanted = set(ws)
    out: dict[int, list[tuple[int, int]]] = {w: [] for w in wanted}
    if bound < 1:
        return out
    # y = 1: (y-1)^2 = 0 leaves x free, and the equation reduces to x = w
    for x in range(1, bound + 1):
        if x in wanted and on_conic("C2", x, x, 1):
            out[x].append((x, 1))
    spf = _spf_sieve(bound)
    for y in range(2, bound + 1):
        for x in _square_divisors_in(y - 1, y, bound, spf):
            lhs = (x + y - 1) ** 2
            xy = x * y
            if lhs % xy == 0 and lhs // xy in wanted:
                out[lhs // xy].append((x, y))
    for w in out:
        out[w].sort()
    return out


def oracle_C2(w: int, bound: int) -> list[tuple[int, int]]:
    return oracle_C2_many([w], bound)[w]


def oracle_C3(w: int, bound: int) -> list[tuple[int, int]]:
    """All positive (x, y) with bound >= x >= y >= 1 on C3(w).

    Per y, the equation is a quadratic in x whose integer roots are extracted.
    """
    out = []
    for y in range(1, bound + 1):
        # x^2 + (2y - w(y+1)) x + y^2 - w(y+1) = 0
        for x in _int_roots(1, 2 * y - w * (y + 1), y * y - w * (y + 1)):
            if y <= x <= bound:
                out.append((x, y))
    out.sort()
    return out


def oracle_C3_naive(w: int, bound: int) -> list[tuple[int, int]]:
    return [
        (x, y)
        for x in range(1, bound + 1)
        for y in range(1, x + 1)
        if (x + y) ** 2 == w * (x + 1) * (y + 1)
    ]


def vieta_descent(w: int, x: int, y: int) -> tuple[int, int]:
    """(x, y) -> (y, z) with x*z = (y - 1)^2, the smaller neighbour on C2(w)."""
    if not (x >= y >= 1):
        raise ValueError(f"need x >= y >= 1, got ({x}, {y})")
    if not on_conic("C2", w, x, y):
        raise NotOnConicError(f"({x}, {y}) is not on C2({w})")
    z, r = divmod((y - 1) ** 2, x)
    if r:
        raise DescentError(f"{x} does not divide {(y - 1) ** 2}")
    if not on_conic("C2", w, y, z):
        raise DescentError(f"descent left C2({w}) at ({y}, {z})")
    return y, z


def descend_to_seed(w: int, x: int, y: int) -> list[tuple[int, int]]:
    """The full descent chain from (x, y) down to (1, 0), inclusive."""
    chain = [(x, y)]
    while y != 0:
        x, y = vieta_descent(w, x, y)
        chain.append((x, y))
    return chain


def _check_nonneg_on(conic: ConicName, w: int, x: Coord, y: Coord) -> None:
    if x < 0 or y < 0:
        raise NotOnConicError(f"coordinates must be non-negative, got ({x}, {y})")
    if not on_conic(conic, w, x, y):
        raise NotOnConicError(f"({x}, {y}) is not on {conic}({w})")


def _as_int(q: Coord) -> int:
    if isinstance(q, QuadInt):
        if q.rad:
            raise NotOnConicError(f"{q} is not an integer")
        return q.rat
    return q


def map_C_to_C2(p: ConicPoint) -> tuple[int, int]:
    """(x, y) on C(w) -> (x^2, y^2) on C2(w)."""
    _check_nonneg_on("C", p.w, p.x, p.y)
    x2, y2 = _as_int(p.x * p.x), _as_int(p.y * p.y)
    assert on_conic("C2", p.w, x2, y2)
    return x2, y2


def map_C2_to_C3(x: int, y: int, w: Optional[int] = None) -> tuple[int, int]:
    """(x, y) on C2(w) -> (2x - 1, 2y - 1) on C3(w); membership checked when w is given."""
    if w is not None:
        _check_nonneg_on("C2", w, x, y)
    image = (2 * x - 1, 2 * y - 1)
    if w is not None:
        assert on_conic("C3", w, *image)
    return image


def map_C_to_C3(p: ConicPoint) -> tuple[int, int]:
    """(x, y) on C(w) -> (2x^2 - 1, 2y^2 - 1) on C3(w)."""
    _check_nonneg_on("C", p.w, p.x, p.y)
    image = (_as_int(2 * p.x * p.x - 1), _as_int(2 * p.y * p.y - 1))
    assert on_conic("C3", p.w, *image)
    return image


def c3_image_comparison(w: int, bound: int) -> dict:
    """Compare brute-force C3 solutions with images of the C2 ladder.

    Whether every positive integer point of C3(w) comes from C2(w) is not
    settled by theory here, so this only reports what the scan finds.
    """
    found = oracle_C3(w, bound)
    images = {
        map_C2_to_C3(x, y)
        for x, y in solve_C2_upto(w, (bound + 1) // 2)
    }
    images = {p for p in images if p[0] <= bound and p[1] >= 1}
    extra = [p for p in found if p not in images]
    missing = sorted(images - set(found))
    return {
        "w": w,
        "bound": bound,
        "oracle": found,
        "ladder_images": sorted(images),
        "not_from_ladder": extra,
        "missing_from_oracle": missing,
    }
