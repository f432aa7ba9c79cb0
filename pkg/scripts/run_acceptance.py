#!/usr/bin/env python3
"""Run every acceptance criterion and print one PASS/FAIL line each."""

import sys
import time

from matconic.acceptance import run_all

if __name__ == "__main__":
    t0 = time.perf_counter()
    ok = run_all()
    print(f"{'all criteria passed' if ok else 'FAILURES'} in {time.perf_counter() - t0:.1f}s")
    sys.exit(0 if ok else 1)
