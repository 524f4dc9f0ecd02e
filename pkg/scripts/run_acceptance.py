#!/usr/bin/env python3
"""Run the verification checks grouped by acceptance criterion.

    python scripts/run_acceptance.py          # all criteria
    python scripts/run_acceptance.py 5 9      # selected ones
"""

import argparse
import sys
import time

from g2spheres import checks


def main(argv=None):
    p = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    p.add_argument("criteria", nargs="*", type=int, default=list(range(1, 14)))
    args = p.parse_args(argv)
    failed = False
    for n in args.criteria:
        t0 = time.perf_counter()
        results = checks.run_criterion(n)
        ok = bool(results) and all(r.status != "FAIL" for r in results)
        failed |= not ok
        print(f"criterion {n:2d}: {'PASS' if ok else 'FAIL'}  ({time.perf_counter() - t0:.2f}s)")
        for r in results:
            if r.status != "PASS":
                print(f"    {r.status} {r.name}: {r.detail}")
    return 1 if failed else 0


if __name__ == "__main__":
    sys.exit(main())
