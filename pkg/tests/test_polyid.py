from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings, strategies as st

from matconic.lrs import terms
from matconic.poly import Poly, poly_add, poly_compose, poly_eval, poly_mul, poly_scale
from matconic.polyid import (
    X,
    a_sq_as_poly,
    b_as_poly,
    c_as_poly,
    chebyshev_S,
    chebyshev_T,
    chebyshev_U,
    morgan_voyce_f,
    morgan_voyce_g,
    u_as_poly,
    verify_MV_identities,
    verify_S_identities,
    verify_uT,
)

x = sympy.Symbol("x")


def to_sympy(p: Poly):
    terms = (sympy.Rational(c.numerator, c.denominator) * x**i for i, c in enumerate(p.coeffs))
    return sum(terms, sympy.Integer(0))


def test_poly_ops():
    assert poly_mul(X, X) == Poly([0, 0, 1])
    assert poly_eval(chebyshev_T(2), Fraction(3, 2)) == Fraction(7, 2)
    assert poly_add(X, -X) == Poly()
    assert Poly([0, 0, 0]).coeffs == ()
    assert poly_scale(X + 1, Fraction(1, 2)) == Poly([Fraction(1, 2), Fraction(1, 2)])
    assert poly_compose(chebyshev_T(2), X + 1) == Poly([1, 4, 2])
    assert Poly().degree == -1


def test_poly_string():
    assert str(Poly([-1, 0, 1])) == "x^2 - 1"
    assert str(Poly([1, -3, 1])) == "x^2 - 3*x + 1"
    assert Poly([Fraction(1, 2)]).to_string("w") == "1/2"
    assert str(Poly()) == "0"


small = st.lists(st.fractions(min_value=-50, max_value=50, max_denominator=7), max_size=5)


@settings(max_examples=50, deadline=None)
@given(small, small, small)
def test_poly_ring_laws(a, b, c):
    p, q, r = Poly(a), Poly(b), Poly(c)
    assert (p + q) * r == p * r + q * r
    assert p * q == q * p
    assert (p * q) * r == p * (q * r)
    assert to_sympy(p * q).expand() == (to_sympy(p) * to_sympy(q)).expand()


@settings(max_examples=50, deadline=None)
@given(small, small, st.fractions(min_value=-20, max_value=20, max_denominator=9))
def test_compose_then_eval(a, b, t):
    p, q = Poly(a), Poly(b)
    assert p.compose(q)(t) == p(q(t))


def test_family_examples():
    assert chebyshev_T(2) == Poly([-1, 0, 2])
    assert chebyshev_S(3) == Poly([0, -2, 0, 1])
    assert [chebyshev_S(n)(2) for n in range(4)] == [1, 2, 3, 4]
    assert morgan_voyce_f(1) == Poly([1, 1])
    assert morgan_voyce_g(1) == Poly([2, 1])
    assert morgan_voyce_f(2) == Poly([1, 3, 1])
    assert b_as_poly(3) == Poly([3, -4, 1])
    assert c_as_poly(3) == Poly([-1, 6, -5, 1])
    assert u_as_poly(2) == X


@pytest.mark.parametrize("n", range(31))
def test_chebyshev_against_sympy(n):
    assert to_sympy(chebyshev_T(n)) == sympy.chebyshevt(n, x).expand()
    assert to_sympy(chebyshev_U(n)) == sympy.chebyshevu(n, x).expand()
    # S_n(x) = U_n(x/2)
    assert chebyshev_S(n) == chebyshev_U(n).compose(Poly([0, Fraction(1, 2)]))


def test_recurrences_hold_symbolically():
    for n in range(1, 30):
        assert chebyshev_T(n + 1) == 2 * X * chebyshev_T(n) - chebyshev_T(n - 1)
        assert chebyshev_U(n + 1) == 2 * X * chebyshev_U(n) - chebyshev_U(n - 1)
        assert chebyshev_S(n + 1) == X * chebyshev_S(n) - chebyshev_S(n - 1)
        assert morgan_voyce_f(n + 1) == (X + 2) * morgan_voyce_f(n) - morgan_voyce_f(n - 1)
        assert morgan_voyce_g(n + 1) == (X + 2) * morgan_voyce_g(n) - morgan_voyce_g(n - 1)


def test_u_and_a_sq_agree():
    for n in range(40):
        assert u_as_poly(n) == a_sq_as_poly(n)


@pytest.mark.parametrize("w", [5, 6, 7, 8])
def test_polys_evaluate_to_sequences(w):
    b, c, u = terms("b", w, 51), terms("c", w, 51), terms("u", w, 51)
    for n in range(51):
        assert b_as_poly(n)(w) == b[n]
        assert c_as_poly(n)(w) == c[n]
        assert u_as_poly(n)(w) == u[n]


def test_uT_spot_checks():
    # n = 2, w = 5: 2(T_2(3/2) - 1)/(5 - 4) = 5
    assert 2 * (chebyshev_T(2)(Fraction(3, 2)) - 1) / (5 - 4) == 5 == u_as_poly(2)(5)
    rep = verify_uT(0)
    assert rep.status == "verified"
    assert verify_uT(30).status == "verified"


def test_uT_numeric_against_closed_form():
    # independent route: u_n = 2(T_n((w-2)/2) - 1)/(w - 4) with sympy's T_n
    for w in (5, 6, 7, 9, 13):
        u = terms("u", w, 25)
        for n in range(25):
            val = 2 * (sympy.chebyshevt(n, sympy.Rational(w - 2, 2)) - 1) / (w - 4)
            assert val == u[n]


def test_S_identity_examples():
    assert chebyshev_S(1) ** 2 - X * chebyshev_S(1) * chebyshev_S(0) + 1 == 1
    assert b_as_poly(2) == chebyshev_S(1).compose(X - 2)
    r = verify_S_identities(30)
    assert [(x.identity, x.status) for x in r] == [
        ("S.i", "verified"),
        ("S.ii", "verified"),
        ("S.iii", "verified"),
        ("S.iv", "verified"),
    ]


def test_MV_identity_examples():
    assert c_as_poly(2) == morgan_voyce_f(2).compose(-X)
    assert chebyshev_S(1) == X * morgan_voyce_g(0).compose(-(X * X))
    assert chebyshev_S(2) == -morgan_voyce_f(1).compose(-(X * X))
    reports = {r.identity: r for r in verify_MV_identities(30)}
    for key in ("MV.i", "MV.ii", "MV.iii", "MV.iv"):
        assert reports[key].status == "verified"
    printed = reports["MV.iv_printed"]
    assert printed.status == "counterexample" and printed.as_expected
    first = printed.counterexamples[0]
    assert first.index == 1
    assert first.lhs == Poly([-1, 0, 1])
    assert first.rhs == Poly([-1])
    assert first.to_json()["lhs"]["poly"] == "x^2 - 1"


def test_report_flags_a_broken_identity(monkeypatch):
    import matconic.polyid as pid

    real = pid.b_as_poly
    monkeypatch.setattr(pid, "b_as_poly", lambda n: real(n) + (1 if n == 4 else 0))
    rep = pid.verify_S_identities(6)[0]
    assert rep.status == "counterexample"
    assert [c.index for c in rep.counterexamples] == [4]
