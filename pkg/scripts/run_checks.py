#!/usr/bin/env python3
"""Run every registered law suite and print one line per (instance, suite).

Deterministic given --seed; exits non-zero if anything fails.
"""

import argparse
import sys
import time

from omegasum.suites import EXTRA_INSTANCES, INSTANCES, available_suites, run_suite


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--cases", type=int, default=200)
    parser.add_argument("--bits", type=int, default=32)
    args = parser.parse_args()

    failures = 0
    t0 = time.time()
    for instance in list(INSTANCES) + list(EXTRA_INSTANCES):
        for suite in available_suites(instance):
            t1 = time.time()
            report = run_suite(instance, suite, args.seed, args.cases, args.bits)
            status = "ok " if report.exit_code == 0 else "FAIL"
            print(
                f"{status} {instance:12s} {suite:12s} "
                f"{report.passes:4d} pass {report.fails:3d} fail "
                f"{report.inconclusive:3d} inconclusive  {time.time() - t1:5.1f}s"
            )
            for line in report.details[:5]:
                print("     ", line)
            if report.exit_code != 0:
                failures += 1
    print(f"total {time.time() - t0:.1f}s, {failures} failing suites")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
