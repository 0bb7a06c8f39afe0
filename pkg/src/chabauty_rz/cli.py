"""Command-line front end.

Exit codes: 0 success (and passing reports), 1 domain error or a failing
verification report, 2 parse or usage error.  All numeric input is exact
rational text; no floats are accepted anywhere.
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction
from typing import List, Optional

from .rationals import fmt_q
from .subgroups import InvalidParameter, ZeroPoint
from .metric import (
    InvalidSequence,
    ToleranceInvalid,
    chabauty_distance,
    verify_limit,
)
from .earring import (
    ConeInterior,
    Earring,
    OnCircle,
    Segment,
    subgroup_to_model,
    winding_count,
)
from .denjoy import UnresolvedSample, winding_count_sampled
from .literals import ParseError, format_subgroup, parse_subgroup
from .plot import write_model_svg
from .suites import UnknownSuite, run_suite

_DOMAIN_ERRORS = (
    InvalidParameter,
    ZeroPoint,
    ToleranceInvalid,
    InvalidSequence,
    UnknownSuite,
    UnresolvedSample,
    OSError,
)


def _rational(text: str) -> Fraction:
    try:
        if "/" in text:
            num, den = text.split("/", 1)
            return Fraction(int(num), int(den))
        return Fraction(int(text))
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"not a rational: {text!r}") from exc


class _Parser(argparse.ArgumentParser):
    # argparse calls sys.exit(2) on usage errors; route through our codes
    def error(self, message):
        raise _UsageError(message)


class _UsageError(Exception):
    pass


def _build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="chabauty-rz", description=__doc__)
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("classify", help="canonical form of a subgroup literal")
    c.add_argument("literal")

    d = sub.add_parser("dist", help="Chabauty distance bracket")
    d.add_argument("left")
    d.add_argument("right")
    d.add_argument("--tol", type=_rational, default=Fraction(1, 1000))

    l = sub.add_parser("limit", help="verify a sequence's limit")
    l.add_argument("--seq", required=True, help="file with one literal per line")
    l.add_argument("--limit", required=True)
    l.add_argument("--tol", type=_rational, default=Fraction(1, 100))
    l.add_argument("--tail", type=int, default=3)

    m = sub.add_parser("model", help="model-space coordinate of a subgroup")
    m.add_argument("literal")

    w = sub.add_parser("wind", help="winding count of a cone boundary")
    w.add_argument("--cone", type=int, required=True)
    w.add_argument("--circle", type=int, required=True)
    w.add_argument("--sampled", action="store_true")
    w.add_argument("--grid", type=int, default=4096)
    w.add_argument("--prec", type=int, default=64)

    v = sub.add_parser("verify", help="run a verification suite")
    v.add_argument("--suite", required=True)
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--budget", type=int, default=100)
    v.add_argument("--json", action="store_true")

    g = sub.add_parser("plot", help="schematic SVG of the model space")
    g.add_argument("--out", required=True)
    g.add_argument("--circles", type=int, default=6)
    g.add_argument("--cones", type=int, default=4)

    return p


def _read_sequence(path: str):
    seq = []
    with open(path, encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, start=1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            try:
                seq.append(parse_subgroup(line))
            except ParseError as exc:
                raise ParseError(f"{path}:{lineno}: {exc}", exc.position)
    return seq


def _model_text(H) -> str:
    m = subgroup_to_model(H)
    if isinstance(m, Segment):
        return f"segment(alpha={fmt_q(m.alpha)})"
    if isinstance(m, ConeInterior):
        return f"cone(k={m.k},alpha={fmt_q(m.alpha)},beta={fmt_q(m.beta)})"
    assert isinstance(m, Earring)
    if isinstance(m.point, OnCircle):
        return f"earring(circle={m.point.circle},t={fmt_q(m.point.t)})"
    return "earring(basepoint)"


def _dispatch(args, out) -> int:
    if args.command == "classify":
        print(format_subgroup(parse_subgroup(args.literal)), file=out)
        return 0

    if args.command == "dist":
        br = chabauty_distance(
            parse_subgroup(args.left), parse_subgroup(args.right), args.tol
        )
        print(f"[{fmt_q(br.lo)},{fmt_q(br.hi)}]", file=out)
        return 0

    if args.command == "limit":
        seq = _read_sequence(args.seq)
        limit = parse_subgroup(args.limit)
        report = verify_limit(seq, limit, args.tol, args.tail)
        for i, br in enumerate(report.distances, start=1):
            print(f"term {i}: [{fmt_q(br.lo)},{fmt_q(br.hi)}]", file=out)
        print(f"result {'pass' if report.passed else 'fail'}", file=out)
        return 0 if report.passed else 1

    if args.command == "model":
        print(_model_text(parse_subgroup(args.literal)), file=out)
        return 0

    if args.command == "wind":
        if args.sampled:
            count = winding_count_sampled(
                args.cone, args.circle, args.grid, args.prec
            )
        else:
            count = winding_count(args.cone, args.circle)
        print(count, file=out)
        return 0

    if args.command == "verify":
        report = run_suite(args.suite, args.seed, args.budget)
        print(report.to_json() if args.json else report.to_text(), file=out)
        return 0 if report.passed else 1

    if args.command == "plot":
        write_model_svg(args.out, args.circles, args.cones)
        print(f"wrote {args.out}", file=out)
        return 0

    raise AssertionError(f"unhandled command {args.command!r}")


def run_cli(argv: Optional[List[str]] = None, out=None) -> int:
    out = out if out is not None else sys.stdout
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except _UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2
    try:
        return _dispatch(args, out)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return 2
    except _DOMAIN_ERRORS as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(run_cli())


if __name__ == "__main__":
    main()
