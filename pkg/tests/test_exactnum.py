import random

import mpmath
import pytest
from hypothesis import given, strategies as st

from matconic.errors import RingMismatchError, SquareParameterError
from matconic.exactnum import (
    QuadInt,
    format_quadint,
    is_perfect_square,
    parse_quadint,
    qi_add,
    qi_cmp,
    qi_mul,
)

NONSQUARE = [w for w in range(5, 60) if is_perfect_square(w) is None]


def Q(rat, rad, w=5):
    return QuadInt(rat, rad, w)


def test_add_examples():
    assert qi_add(Q(1, 0), Q(0, 1)) == Q(1, 1)
    x = Q(4, -3, 7)
    assert qi_add(Q(0, 0, 7), x) == x
    assert qi_add(Q(3, 2), Q(-3, -2)) == Q(0, 0)


def test_mul_examples():
    assert qi_mul(Q(0, 1), Q(0, 1)) == Q(5, 0)
    assert qi_mul(Q(1, 1), Q(1, -1)) == Q(-4, 0)
    assert qi_mul(Q(0, 3), Q(4, 0)) == Q(0, 12)


def test_cmp_examples():
    assert qi_cmp(Q(0, 1), Q(2, 0)) == 1
    assert qi_cmp(Q(3, -1), Q(3, -1)) == 0
    assert qi_cmp(Q(4, 0), Q(0, 1)) == 1
    assert Q(0, 1) < Q(3, 0)


def test_is_perfect_square():
    assert is_perfect_square(49) == 7
    assert is_perfect_square(5) is None
    assert is_perfect_square(207936) == 456
    assert is_perfect_square(0) == 0
    assert is_perfect_square(10**40 + 1) is None


def test_mismatched_w_raises():
    with pytest.raises(RingMismatchError):
        qi_add(Q(1, 1, 5), Q(1, 1, 6))
    with pytest.raises(RingMismatchError):
        qi_mul(Q(1, 1, 5), Q(1, 1, 7))
    with pytest.raises(RingMismatchError):
        qi_cmp(Q(1, 1, 5), Q(1, 1, 7))


@pytest.mark.parametrize("w", [4, 9, 16, 100])
def test_square_w_rejected(w):
    with pytest.raises(SquareParameterError):
        QuadInt(1, 1, w)


def test_small_w_rejected():
    with pytest.raises(ValueError):
        QuadInt(1, 1, 3)


@pytest.mark.parametrize(
    "x, text",
    [
        (Q(0, 0), "0"),
        (Q(-7, 0), "-7"),
        (Q(0, 1), "sqrt(5)"),
        (Q(0, -1), "-sqrt(5)"),
        (Q(3, 2), "3+2*sqrt(5)"),
        (Q(3, -2), "3-2*sqrt(5)"),
        (Q(-1, 1), "-1+sqrt(5)"),
    ],
)
def test_format(x, text):
    assert format_quadint(x) == text
    assert parse_quadint(text, w=5) == x


def test_parse_errors():
    with pytest.raises(ValueError):
        parse_quadint("7")
    with pytest.raises(ValueError):
        parse_quadint("3+*sqrt")
    with pytest.raises(RingMismatchError):
        parse_quadint("sqrt(6)", w=5)


ws = st.sampled_from(NONSQUARE)
ints = st.integers(-(10**30), 10**30)


@st.composite
def triples(draw):
    w = draw(ws)
    return tuple(QuadInt(draw(ints), draw(ints), w) for _ in range(3))


@given(triples())
def test_ring_axioms(t):
    x, y, z = t
    assert (x + y) + z == x + (y + z)
    assert (x * y) * z == x * (y * z)
    assert x * (y + z) == x * y + x * z
    assert x * y == y * x
    assert x + y == y + x


@given(triples())
def test_norm_multiplicative(t):
    x, y, _ = t
    assert (x * y).norm() == x.norm() * y.norm()


@given(triples())
def test_cmp_total_order(t):
    x, y, z = t
    assert qi_cmp(x, y) == -qi_cmp(y, x)
    if qi_cmp(x, y) <= 0 and qi_cmp(y, z) <= 0:
        assert qi_cmp(x, z) <= 0
    assert (qi_cmp(x, y) == 0) == (x == y)


@given(st.sampled_from(NONSQUARE), st.integers(-50, 50), st.integers(-50, 50))
def test_roundtrip_text(w, p, q):
    x = QuadInt(p, q, w)
    assert parse_quadint(format_quadint(x), w=w) == x


def test_cmp_agrees_with_interval_arithmetic():
    rng = random.Random(1234)
    mpmath.iv.dps = 60
    for _ in range(10_000):
        w = rng.choice(NONSQUARE)
        big = 10 ** rng.randint(1, 25)
        x = QuadInt(rng.randint(-big, big), rng.randint(-big, big), w)
        y = QuadInt(rng.randint(-big, big), rng.randint(-big, big), w)
        d = x - y
        val = mpmath.iv.mpf(d.rat) + mpmath.iv.mpf(d.rad) * mpmath.iv.sqrt(w)
        if val.a > 0:
            expected = 1
        elif val.b < 0:
            expected = -1
        else:
            assert d.rat == 0 and d.rad == 0, "interval too wide to decide"
            expected = 0
        assert qi_cmp(x, y) == expected


def test_integer_interop():
    x = Q(2, 1)
    assert x + 1 == Q(3, 1)
    assert 2 * x == Q(4, 2)
    assert Q(5, 0) == 5
    assert hash(Q(5, 0)) == hash(5)
    assert x ** 3 == x * x * x
