"""Command-line front end for exact halving on full-2-torsion curves.

Usage sketch (installed entry point is ``halve2``):

    halve2 divisible --field Q --roots 0,3,4 --point 4,0
    halve2 halve     --field Q --roots 0,3,4 --point 4,0 --format text
    halve2 tower     --field Fp:13 --roots 0,3,4 --point 4,0 --max-depth 3
    halve2 order4    --field Q --roots 0,3,4 --index 3
    halve2 oracle    --field Fp:7 --roots 0,3,4
    halve2 verify    --field Q --roots 0,3,4 --point 4,0 < report.json

Field elements are decimal literals ("7", "-2", and over Q also "3/4");
points are "x,y" pairs of literals or the word "inf"; roots are three
comma-separated literals. Results go to standard output as JSON (or a
plain-text rendering with --format text); diagnostics go to standard
error.

Exit codes: 0 for any mathematically valid result, including "not
halvable" and a failed verify audit; 1 for unusable input (parse
errors, points off the curve, repeated roots, unsupported fields); 2
when an internal cross-check fails, which indicates a bug in this
package rather than in the input.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .curves import INFINITY, Curve, Point, make_curve, point_to_json
from .errors import (
    DegenerateDenominatorError,
    ExactCurveError,
    InfinityInputError,
    InvariantBreachError,
    ParseError,
)
from .fields import FieldSpec, parse_field_spec
from .halving import (
    halves,
    moebius_check,
    report_from_json,
    report_to_json,
    square_witness,
    verify_cubic_identity,
    vieta_check,
    witness_to_json,
)
from .oracle import PointTable
from .tower import chain_to_json, order4_points, two_adic_depth


class _Parser(argparse.ArgumentParser):
    """argparse with usage failures reported at exit code 1, not 2."""

    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(1)


def _positive_int(text: str) -> int:
    try:
        n = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"{text!r} is not an integer") from None
    if n < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {n}")
    return n


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="halve2",
        description="Decide divisibility by 2 and construct halving points "
        "on curves y^2 = (x-a1)(x-a2)(x-a3) in exact arithmetic.",
    )
    sub = parser.add_subparsers(dest="subcommand", required=True, parser_class=_Parser)

    def common(p: argparse.ArgumentParser, point: bool = True, fmt: bool = True):
        p.add_argument("--field", required=True, metavar="SPEC",
                       help="'Q' or 'Fp:<odd prime>'")
        p.add_argument("--roots", required=True, metavar="A1,A2,A3",
                       help="three distinct element literals")
        if point:
            p.add_argument("--point", required=True, metavar="X,Y",
                           help="affine point 'x,y' or 'inf'")
        if fmt:
            p.add_argument("--format", choices=("json", "text"), default="json")

    p = sub.add_parser("divisible", help="is the point twice a rational point?")
    common(p)
    p.set_defaults(handler=_cmd_divisible)

    p = sub.add_parser("halve", help="construct all four halves with tangent data")
    common(p)
    p.set_defaults(handler=_cmd_halve)

    p = sub.add_parser("tower", help="iterate halving to a depth-capped chain")
    common(p)
    p.add_argument("--max-depth", required=True, type=_positive_int, metavar="K")
    p.set_defaults(handler=_cmd_tower)

    p = sub.add_parser("order4", help="the four order-4 points above a 2-torsion point")
    common(p, point=False)
    p.add_argument("--index", required=True, type=int, choices=(1, 2, 3),
                   help="which root a_j supplies the 2-torsion point (a_j, 0)")
    p.set_defaults(handler=_cmd_order4)

    p = sub.add_parser("oracle", help="brute-force doubling-preimage table (JSON lines)")
    common(p, point=False, fmt=False)
    p.set_defaults(handler=_cmd_oracle)

    p = sub.add_parser("verify", help="audit a halving report (JSON on stdin) "
                       "with the cubic-identity, moebius and vieta checks")
    common(p)
    p.set_defaults(handler=_cmd_verify)

    return parser


# --- input parsing -------------------------------------------------------


def _parse_roots(text: str, field: FieldSpec):
    parts = text.split(",")
    if len(parts) != 3:
        raise ParseError(f"--roots takes three comma-separated literals, got {text!r}")
    return [field.element(part.strip()) for part in parts]


def _parse_point(text: str, field: FieldSpec) -> Point:
    body = text.strip()
    if body == "inf":
        return INFINITY
    parts = body.split(",")
    if len(parts) != 2:
        raise ParseError(f"--point takes 'x,y' or 'inf', got {text!r}")
    return Point(field.element(parts[0].strip()), field.element(parts[1].strip()))


def _curve_from_args(args) -> Curve:
    field = parse_field_spec(args.field)
    return make_curve(field, *_parse_roots(args.roots, field))


def _affine_input(args, curve: Curve) -> Point:
    point = _parse_point(args.point, curve.field)
    if point.is_infinity:
        raise InfinityInputError(
            "infinity is always divisible by 2; its four halves are the "
            "2-torsion points (use the order4 subcommand for those of exact order 4)"
        )
    return curve.require_on_curve(point)


def _emit(doc: dict) -> None:
    print(json.dumps(doc, indent=2))


# --- subcommands ---------------------------------------------------------


def _cmd_divisible(args) -> int:
    curve = _curve_from_args(args)
    witness = square_witness(curve, _affine_input(args, curve))
    halvable = all(w.is_square for w in witness)
    if args.format == "json":
        _emit({"halvable": halvable, "witness": witness_to_json(witness)})
    else:
        print(f"halvable: {'yes' if halvable else 'no'}")
        for line in _witness_lines(witness):
            print(line)
    return 0


def _cmd_halve(args) -> int:
    curve = _curve_from_args(args)
    point = _affine_input(args, curve)
    report = halves(curve, point)
    if args.format == "json":
        _emit(report_to_json(report))
        return 0
    print(f"halvable: {'yes' if report.halvable else 'no'}")
    for line in _witness_lines(report.witness):
        print(line)
    for h in report.halves:
        print(f"Q = {h.point}   triple {h.triple}   tangent {h.tangent}")
    return 0


def _cmd_tower(args) -> int:
    curve = _curve_from_args(args)
    chain = two_adic_depth(curve, _affine_input(args, curve), args.max_depth)
    if args.format == "json":
        _emit(chain_to_json(chain))
        return 0
    print(f"base: {chain.base}")
    print(f"depth: {chain.depth}")
    for k, q in enumerate(chain.links, start=1):
        print(f"  {k}: {q}")
    return 0


def _cmd_order4(args) -> int:
    curve = _curve_from_args(args)
    points = order4_points(curve, args.index)
    base = Point(curve.roots[args.index - 1], curve.field.zero)
    if args.format == "json":
        _emit({
            "index": args.index,
            "base": point_to_json(base),
            "points": [
                {
                    "Q": point_to_json(entry.point),
                    "triple": [str(r) for r in entry.triple],
                    "tangent": {
                        "l": str(entry.tangent.slope),
                        "m": str(entry.tangent.intercept),
                    },
                    "confirmed_order_4": entry.confirmed,
                }
                for entry in points
            ],
        })
        return 0
    print(f"base: {base}")
    for entry in points:
        print(f"Q = {entry.point}   triple {entry.triple}   order 4 confirmed")
    return 0


def _cmd_oracle(args) -> int:
    curve = _curve_from_args(args)
    raw = os.environ.get("HALVE2_PRIME_BOUND")
    bound = None
    if raw is not None:
        try:
            bound = int(raw)
        except ValueError:
            raise ParseError(
                f"HALVE2_PRIME_BOUND must be an integer, got {raw!r}"
            ) from None
    table = PointTable.build(curve, bound)
    for q in table.points:
        record = {
            "point": point_to_json(q),
            "preimages": [point_to_json(pre) for pre in table.preimages[q]],
        }
        print(json.dumps(record, separators=(",", ":")))
    return 0


def _cmd_verify(args) -> int:
    curve = _curve_from_args(args)
    point = _affine_input(args, curve)
    report = report_from_json(sys.stdin.read(), curve.field)
    rows = []
    for i, h in enumerate(report.halves, start=1):
        cubic = verify_cubic_identity(curve, h.tangent, h.point.x, point.x)
        try:
            moebius = moebius_check(curve, h.triple, h.tangent, h.point.x)
        except DegenerateDenominatorError:
            # x1 collides with a root: the map does not exist, so the
            # claimed half cannot be genuine -- count the check as failed.
            moebius = False
        vieta = vieta_check(point, h.triple, h.tangent, h.point.x)
        rows.append((i, cubic, moebius, vieta))
    all_pass = all(c and mo and v for _, c, mo, v in rows)
    if args.format == "json":
        _emit({
            "checks": [
                {"half": i, "cubic_identity": c, "moebius": mo, "vieta": v}
                for i, c, mo, v in rows
            ],
            "all_pass": all_pass,
        })
        return 0
    for i, c, mo, v in rows:
        print(f"half {i} cubic_identity: {'pass' if c else 'FAIL'}")
        print(f"half {i} moebius: {'pass' if mo else 'FAIL'}")
        print(f"half {i} vieta: {'pass' if v else 'FAIL'}")
    print(f"all checks: {'pass' if all_pass else 'FAIL'}")
    return 0


def _witness_lines(witness) -> list[str]:
    lines = []
    for w in witness:
        if w.is_square:
            lines.append(f"  index {w.index}: difference {w.difference}, square, root {w.root}")
        else:
            lines.append(f"  index {w.index}: difference {w.difference}, not a square")
    return lines


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # raised by --help (code 0) and by _Parser.error (code 1)
        return int(exc.code or 0)
    try:
        return args.handler(args)
    except InvariantBreachError as exc:
        print(f"halve2: internal invariant breach: {exc}", file=sys.stderr)
        return 2
    except ExactCurveError as exc:
        print(f"halve2: error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
