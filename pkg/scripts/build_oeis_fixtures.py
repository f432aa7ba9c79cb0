#!/usr/bin/env python3
"""Write the bundled b-file fixtures for the Table 1 sequences.

Terms come from closed forms evaluated with sympy (Fibonacci/Lucas numbers,
squares, Binet-type expressions in the roots of t^2 - p t + 1), so they do
not share code with matconic.lrs.  Run with --fetch on a machine with
network access to replace them with the real OEIS b-files instead.

    python scripts/build_oeis_fixtures.py [--fetch] [--terms 40]
"""

import argparse
from pathlib import Path

import sympy as sp

DATA = Path(__file__).resolve().parents[1] / "src" / "matconic" / "data"


def binet(p, s0, s1):
    """s_n for s_{n+1} = p s_n - s_{n-1}, via the roots of t^2 - p t + 1."""
    d = sp.sqrt(p * p - 4)
    al, be = (p + d) / 2, (p - d) / 2
    A = (s1 - s0 * be) / (al - be)
    B = (s0 * al - s1) / (al - be)
    return lambda n: int(sp.nsimplify(sp.expand(A * al**n + B * be**n)))


def u_closed(w):
    """(alpha^n + alpha^-n - 2)/(w - 4), alpha + 1/alpha = w - 2."""
    if w == 4:
        return lambda n: n * n
    d = sp.sqrt((w - 2) ** 2 - 4)
    al, be = (w - 2 + d) / 2, (w - 2 - d) / 2
    return lambda n: int(sp.nsimplify(sp.expand((al**n + be**n - 2) / (w - 4))))


# A-number -> (offset, n -> term)
SEQUENCES = {
    "A000290": (0, lambda n: n * n),
    "A001477": (0, lambda n: n),
    "A005408": (0, lambda n: 2 * n + 1),
    "A004146": (0, lambda n: sp.lucas(2 * n) - 2),
    "A001906": (0, lambda n: sp.fibonacci(2 * n)),
    "A002878": (0, lambda n: sp.lucas(2 * n + 1)),
    "A092184": (0, u_closed(6)),
    "A001353": (0, binet(4, 0, 1)),
    "A001834": (0, binet(4, 1, 5)),
    "A054493": (0, lambda n, f=u_closed(7): f(n + 1)),
    "A004254": (0, binet(5, 0, 1)),
    "A030221": (0, binet(5, 1, 6)),
    "A001108": (0, u_closed(8)),
    "A001109": (0, binet(6, 0, 1)),
    "A002315": (0, binet(6, 1, 7)),
    "A049684": (0, lambda n: sp.fibonacci(2 * n) ** 2),
    "A004187": (0, binet(7, 0, 1)),
    "A033890": (0, lambda n: sp.fibonacci(4 * n + 2)),
    "A095004": (0, lambda n, f=u_closed(10): f(n + 1)),
    "A001090": (0, binet(8, 0, 1)),
    "A057080": (0, binet(8, 1, 9)),
    "A098296": (0, u_closed(11)),
    "A018913": (0, binet(9, 0, 1)),
    "A057081": (0, binet(9, 1, 10)),
}


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--terms", type=int, default=40)
    ap.add_argument("--fetch", action="store_true", help="download real b-files from oeis.org")
    args = ap.parse_args()
    DATA.mkdir(parents=True, exist_ok=True)
    for anum, (offset, term) in SEQUENCES.items():
        path = DATA / f"b{anum[1:]}.txt"
        if args.fetch:
            from matconic.oeis import fetch_bfile, parse_bfile, render_bfile

            fx = parse_bfile(fetch_bfile(anum, allow_network=True), a_number=anum)
            fx.terms = fx.terms[: args.terms]
            path.write_text(render_bfile(fx, comment=f"{anum} (OEIS b-file, truncated)"))
        else:
            lines = [f"# {anum}: generated from closed form, {args.terms} terms"]
            lines += [f"{offset + i} {int(term(i))}" for i in range(args.terms)]
            path.write_text("\n".join(lines) + "\n")
        print(path.name)


if __name__ == "__main__":
    main()
