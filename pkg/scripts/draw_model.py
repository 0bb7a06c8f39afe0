#!/usr/bin/env python3
"""Emit the schematic SVG of the model space.

Usage: python3 scripts/draw_model.py out.svg [--circles N] [--cones N]
"""

import argparse

from chabauty_rz.plot import write_model_svg


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("out")
    parser.add_argument("--circles", type=int, default=6)
    parser.add_argument("--cones", type=int, default=4)
    args = parser.parse_args()
    write_model_svg(args.out, args.circles, args.cones)
    print(f"wrote {args.out}")


if __name__ == "__main__":
    main()
