"""The nine exit criteria, as functions returning ``(passed, detail)``.

Used by tests/test_acceptance.py and scripts/run_acceptance.py.
"""

from __future__ import annotations

from functools import lru_cache

from . import conics, lrs, oeis, polyid
from .exactnum import QuadInt

RADICAL_WS = (5, 6, 7, 8, 10, 11)
RADICAL_BOUND = 10**4
C2_WS = tuple(range(4, 21))
C2_BOUND = 10**5


@lru_cache(maxsize=1)
def _c2_oracle() -> dict[int, list[tuple[int, int]]]:
    return conics.oracle_C2_many(C2_WS, C2_BOUND)


def criterion_1():
    bad = []
    for w in RADICAL_WS:
        found = conics.oracle_radical_points(w, RADICAL_BOUND)
        generated = conics.truncate_classes(conics.radical_points_upto(w, RADICAL_BOUND), RADICAL_BOUND)
        if set(found) != set(generated) or len(found) != len(generated):
            bad.append(w)
    return not bad, f"w={RADICAL_WS}, bound={RADICAL_BOUND}, mismatched w: {bad}"


def criterion_2():
    oracle = _c2_oracle()
    bad = [w for w in C2_WS if set(oracle[w]) != set(conics.solve_C2_upto(w, C2_BOUND))]
    total = sum(len(v) for v in oracle.values())
    return not bad, f"w=4..20, bound={C2_BOUND}, {total} solutions, mismatched w: {bad}"


def criterion_3():
    failures = 0
    for w in (5, 6, 7, 8):
        a = lrs.a_terms(w, 202)
        for n in range(1, 201):
            if a[n] * a[n] - a[n - 1] * a[n + 1] != 1:
                failures += 1
            if not conics.on_conic("C", w, a[n], a[n - 1]):
                failures += 1
    return failures == 0, f"n<=200, w in 5..8, failures={failures}"


def criterion_4():
    failures = []
    for w in (5, 6, 7, 10):
        r = QuadInt.sqrt(w)
        a = lrs.a_terms(w, 2 * 101 + 1)
        b = lrs.terms("b", w, 102)
        c = lrs.terms("c", w, 102)
        u = lrs.terms("u", w, 2 * 101 + 1)
        for n in range(101):
            checks = {
                "a2n": a[2 * n] == r * b[n],
                "a2n+1": a[2 * n + 1] == c[n],
                "b_next": b[n + 1] == c[n] - b[n],
                "c_next": c[n + 1] == w * b[n + 1] - c[n],
                "u=a^2": u[n] == a[n] * a[n],
                "u2n": u[2 * n] == w * b[n] ** 2,
                "u2n+1": u[2 * n + 1] == c[n] ** 2,
            }
            failures += [(w, n, k) for k, ok in checks.items() if not ok]
    return not failures, f"n<=100, w in (5,6,7,10), failures={failures[:5]}"


def criterion_5():
    bad = []
    for w, row in oeis.TABLE1.items():
        for which, (anum, align) in row.refs().items():
            fx = oeis.load_fixture(anum)
            ref = oeis.BFileFixture(anum, fx.offset, fx.terms[:20])
            gen = oeis.BFileFixture(anum, fx.offset, lrs.terms(which, w, 20 + align.shift)[align.shift:])
            if oeis.render_bfile(gen).encode() != oeis.render_bfile(ref).encode():
                bad.append((w, which, anum))
    return not bad, f"8 rows x 3 sequences x 20 terms, mismatches: {bad}"


def criterion_6():
    reports = polyid.verify_all(30)
    wrong = [r.identity for r in reports if not r.as_expected]
    printed = next(r for r in reports if r.identity == "MV.iv_printed")
    first = printed.counterexamples[0] if printed.counterexamples else None
    X = polyid.X
    ok_printed = (
        first is not None
        and first.index == 1
        and first.lhs == X * X - 1
        and first.rhs == polyid.Poly.const(-1)
    )
    detail = ", ".join(f"{r.identity}:{r.status}" for r in reports)
    return not wrong and ok_printed, detail


def criterion_7():
    bad = []
    steps = 0
    for w in C2_WS:
        ladder = set(conics.solve_C2_upto(w, C2_BOUND)) | {(1, 0)}
        for x, y in _c2_oracle()[w]:
            chain = conics.descend_to_seed(w, x, y)
            steps += len(chain) - 1
            if chain[-1] != (1, 0) or not set(chain) <= ladder:
                bad.append((w, x, y))
    return not bad, f"{steps} descent steps, failures: {bad[:5]}"


def criterion_8():
    bad = []
    for w in RADICAL_WS:
        for p in conics.radical_points(w, 50):
            lhs = conics.map_C2_to_C3(*conics.map_C_to_C2(p), w=w)
            if lhs != conics.map_C_to_C3(p):
                bad.append((w, p.n))
    return not bad, f"50 points x w={RADICAL_WS}, failures: {bad}"


def criterion_9():
    bad = []
    for w in range(4, 12):
        spec = lrs.absorb_constant(lrs.spec_u(w))
        if spec != lrs.LrsSpec((w - 1, -(w - 1), 1), (0, 1, w)):
            bad.append(("spec", w))
        if lrs.lrs_terms(spec, 101) != lrs.lrs_terms(lrs.spec_u(w), 101):
            bad.append(("terms", w))
    f = lrs.char_poly(lrs.spec_b(5))
    k = lrs.kronecker_char_poly(f, f)
    squares = [t * t for t in lrs.terms("b", 5, 51)]
    if not lrs.annihilates(k, squares):
        bad.append(("kronecker", 5))
    return not bad, f"absorbed u-spec w=4..11 n<=100; kron={k.to_string('t')}; failures: {bad}"


CRITERIA = {
    1: ("radical-point completeness vs oracle", criterion_1),
    2: ("C2 ladder completeness vs oracle", criterion_2),
    3: ("determinant and conic invariants", criterion_3),
    4: ("parity and cross-recurrence identities", criterion_4),
    5: ("Table 1 reproduction", criterion_5),
    6: ("symbolic identity suite", criterion_6),
    7: ("Vieta descent", criterion_7),
    8: ("conic-map coherence", criterion_8),
    9: ("absorb_constant and Kronecker annihilation", criterion_9),
}


def run_all(out=print) -> bool:
    ok_all = True
    for k, (name, fn) in CRITERIA.items():
        ok, detail = fn()
        ok_all &= ok
        out(f"{'PASS' if ok else 'FAIL'} criterion {k}: {name} -- {detail}")
    return ok_all
