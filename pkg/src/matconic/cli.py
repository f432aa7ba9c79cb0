"""Command-line entry point.

    matconic seq --which u --w 5 --count 6 --format csv
    matconic points --w 5 --count 3
    matconic solve --conic C2 --w 5 --count 4
    matconic oracle --conic C --w 5 --bound 100
    matconic verify --identity all --n-max 30
    matconic oeis-check --w 7 --count 20 [--fetch]

JSON records carry ``"schema": 1``; big integers are decimal strings and
elements of Z[sqrt(w)] are ``{"rat": ..., "rad": ..., "w": ...}``.
Exit status: 0 ok, 1 domain error or mismatch, 2 usage error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from typing import Optional, Sequence

from . import conics, lrs, oeis, polyid
from .errors import MatconicError
from .exactnum import QuadInt, format_quadint, is_perfect_square

SCHEMA = 1


def _enc(v):
    if isinstance(v, QuadInt):
        return {"rat": str(v.rat), "rad": str(v.rad), "w": v.w}
    return str(v)


def _text(v) -> str:
    return format_quadint(v) if isinstance(v, QuadInt) else str(v)


def _dump(obj) -> str:
    return json.dumps(obj, separators=(",", ":"))


def _csv(header: Sequence[str], rows) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue()


def _cmd_seq(args, out) -> int:
    values = lrs.terms(args.which, args.w, args.count)
    if args.format == "csv":
        out.write(_csv(["n", args.which], ((n, _text(v)) for n, v in enumerate(values))))
    else:
        rec = {
            "schema": SCHEMA,
            "command": "seq",
            "args": {"which": args.which, "w": args.w, "count": args.count},
            "terms": [_enc(v) for v in values],
        }
        out.write(_dump(rec) + "\n")
    return 0


def _emit_points(records: list[dict], fmt: str, out) -> None:
    if fmt == "csv":
        header = ["conic", "w", "n", "x", "y", "side"]
        rows = [[rec.get("_text", {}).get(k, rec.get(k, "")) for k in header] for rec in records]
        out.write(_csv(header, rows))
        return
    for rec in records:
        rec = {k: v for k, v in rec.items() if k != "_text"}
        out.write(_dump(rec) + "\n")


def _point_record(conic, w, x, y, n=None, side=None) -> dict:
    rec = {"schema": SCHEMA, "conic": conic, "w": w}
    if n is not None:
        rec["n"] = n
    rec["x"], rec["y"] = _enc(x), _enc(y)
    if side is not None:
        rec["side"] = side
    rec["_text"] = {"x": _text(x), "y": _text(y)}
    return rec


def _cmd_points(args, out) -> int:
    if is_perfect_square(args.w) is not None:
        pts = conics.integer_points_C(args.w, args.count)
    else:
        pts = conics.radical_points(args.w, args.count)
    records = [_point_record("C", p.w, p.x, p.y, p.n, p.side) for p in pts]
    _emit_points(records, args.format, out)
    return 0


def _cmd_solve(args, out) -> int:
    pairs = conics.solve_C2(args.w, args.count)
    if args.conic == "C3":
        pairs = [conics.map_C2_to_C3(x, y, args.w) for x, y in pairs]
    records = [_point_record(args.conic, args.w, x, y, n) for n, (x, y) in enumerate(pairs)]
    _emit_points(records, args.format, out)
    return 0


def _cmd_oracle(args, out) -> int:
    if args.conic == "C":
        records = []
        for cls in conics.oracle_radical_points(args.w, args.bound):
            x, y = cls.point(args.w)
            records.append(_point_record("C", args.w, x, y, side=cls.side))
    else:
        scan = conics.oracle_C2 if args.conic == "C2" else conics.oracle_C3
        records = [_point_record(args.conic, args.w, x, y) for x, y in scan(args.w, args.bound)]
    _emit_points(records, args.format, out)
    return 0


def _cmd_verify(args, out) -> int:
    if args.identity == "uT":
        reports = [polyid.verify_uT(args.n_max)]
    elif args.identity == "S":
        reports = polyid.verify_S_identities(args.n_max)
    elif args.identity == "MV":
        reports = polyid.verify_MV_identities(args.n_max)
    else:
        reports = polyid.verify_all(args.n_max)
    for r in reports:
        out.write(_dump({"schema": SCHEMA, "command": "verify", **r.to_json()}) + "\n")
    return 0 if all(r.as_expected for r in reports) else 1


def _cmd_oeis(args, out) -> int:
    report = oeis.check_table1(args.w, args.count, fetch=args.fetch)
    if args.format == "csv":
        rows = [
            (which, s["a_number"], s["shift"], s["match"], "" if s["first_mismatch"] is None else s["first_mismatch"])
            for which, s in report["sequences"].items()
        ]
        out.write(_csv(["sequence", "a_number", "shift", "match", "first_mismatch"], rows))
    else:
        out.write(_dump({"schema": SCHEMA, "command": "oeis-check", **report}) + "\n")
    return 0 if report["match"] else 1


def _positive(text: str) -> int:
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {v}")
    return v


def _nonneg(text: str) -> int:
    v = int(text)
    if v < 0:
        raise argparse.ArgumentTypeError(f"expected a non-negative integer, got {v}")
    return v


def _w_arg(text: str) -> int:
    v = int(text)
    if v < 4:
        raise argparse.ArgumentTypeError(f"w must be >= 4, got {v}")
    return v


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="matconic", description=__doc__.split("\n\n")[0])
    fmt = argparse.ArgumentParser(add_help=False)
    fmt.add_argument("--format", choices=["json", "csv"], default="json")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("seq", parents=[fmt], help="terms of a, b, c or u")
    s.add_argument("--which", choices=["a", "b", "c", "u"], required=True)
    s.add_argument("--w", type=_w_arg, required=True)
    s.add_argument("--count", type=_nonneg, required=True)
    s.set_defaults(func=_cmd_seq)

    s = sub.add_parser("points", parents=[fmt], help="radical points P_1..P_count of C(w)")
    s.add_argument("--w", type=_w_arg, required=True)
    s.add_argument("--count", type=_positive, required=True)
    s.set_defaults(func=_cmd_points)

    s = sub.add_parser("solve", parents=[fmt], help="integer ladder on C2(w) or C3(w)")
    s.add_argument("--conic", choices=["C2", "C3"], default="C2")
    s.add_argument("--w", type=_w_arg, required=True)
    s.add_argument("--count", type=_positive, required=True)
    s.set_defaults(func=_cmd_solve)

    s = sub.add_parser("oracle", parents=[fmt], help="brute-force scan for points")
    s.add_argument("--conic", choices=["C", "C2", "C3"], required=True)
    s.add_argument("--w", type=_w_arg, required=True)
    s.add_argument("--bound", type=_positive, required=True)
    s.set_defaults(func=_cmd_oracle)

    s = sub.add_parser("verify", help="polynomial identity suite")
    s.add_argument("--identity", choices=["uT", "S", "MV", "all"], default="all")
    s.add_argument("--n-max", type=_positive, default=30)
    s.add_argument("--format", choices=["json"], default="json")
    s.set_defaults(func=_cmd_verify)

    s = sub.add_parser("oeis-check", parents=[fmt], help="compare u, b, c with Table 1 references")
    s.add_argument("--w", type=_w_arg, required=True)
    s.add_argument("--count", type=_positive, default=20)
    s.add_argument("--fetch", action="store_true", help="download b-files from oeis.org")
    s.set_defaults(func=_cmd_oeis)
    return p


def run(argv: Optional[Sequence[str]] = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as e:
        return 0 if e.code is None else int(e.code)
    try:
        return args.func(args, out)
    except (MatconicError, ValueError, OSError) as e:
        print(f"matconic {args.command}: {e}", file=err)
        return 1


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
