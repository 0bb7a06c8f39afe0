#!/usr/bin/env python3
"""Run every verification suite and print the text reports.

Usage: python3 scripts/run_suites.py [--seed N] [--budget N] [--json]
"""

import argparse
import sys

from chabauty_rz import run_suite

SUITES = ("classification", "metric", "charts", "convergence", "winding", "equivalence")


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--budget", type=int, default=100)
    parser.add_argument("--json", action="store_true")
    args = parser.parse_args()

    all_pass = True
    for name in SUITES:
        report = run_suite(name, args.seed, args.budget)
        print(report.to_json() if args.json else report.to_text())
        print()
        all_pass = all_pass and report.passed
    return 0 if all_pass else 1


if __name__ == "__main__":
    sys.exit(main())
