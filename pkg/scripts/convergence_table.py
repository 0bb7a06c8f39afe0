#!/usr/bin/env python3
"""Print distance brackets for the scripted convergence sequences.

Usage: python3 scripts/convergence_table.py [--kmax N] [--tol p/q]
"""

import argparse
from fractions import Fraction

from chabauty_rz import chabauty_distance
from chabauty_rz.literals import format_subgroup
from chabauty_rz.suites import CONVERGENCE_SCRIPTS


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--kmax", type=int, default=64)
    parser.add_argument("--tol", type=Fraction, default=Fraction(1, 100))
    args = parser.parse_args()

    ks = []
    k = 4
    while k <= args.kmax:
        ks.append(k)
        k *= 2

    for name, seq, limit in CONVERGENCE_SCRIPTS:
        print(f"{name} -> {format_subgroup(limit)}")
        for k in ks:
            br = chabauty_distance(seq(k), limit, args.tol)
            print(f"  k={k:3d}  {format_subgroup(seq(k)):42s} [{br.lo},{br.hi}]")


if __name__ == "__main__":
    main()
