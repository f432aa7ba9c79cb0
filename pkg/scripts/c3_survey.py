#!/usr/bin/env python3
"""Look for positive integer points of C3(w) that are not images of the C2 ladder.

    python scripts/c3_survey.py --w-max 30 --bound 20000
"""

import argparse
import json

from matconic.conics import c3_image_comparison


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--w-min", type=int, default=4)
    ap.add_argument("--w-max", type=int, default=20)
    ap.add_argument("--bound", type=int, default=10_000)
    args = ap.parse_args()
    outliers = 0
    for w in range(args.w_min, args.w_max + 1):
        rep = c3_image_comparison(w, args.bound)
        outliers += len(rep["not_from_ladder"])
        print(json.dumps({
            "w": w,
            "points": len(rep["oracle"]),
            "not_from_ladder": rep["not_from_ladder"],
        }))
    print(f"# {outliers} point(s) outside the ladder image, x <= {args.bound}")


if __name__ == "__main__":
    main()
