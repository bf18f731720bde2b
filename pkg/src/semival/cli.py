"""Command line front end: ``semival {std-basis,semiring,check,oracle} FILE``."""
from __future__ import annotations

import argparse
import sys

from . import pipeline
from .document import load_curve
from .errors import (MissingData, NonTermination, ParseError, PrecisionInsufficient,
                     ValidationError, VerificationFailure)

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_PRECISION = 3
EXIT_VERIFICATION = 4
EXIT_PROPERTY = 5
EXIT_ORACLE = 6


def _sigma(text: str) -> tuple:
    try:
        return tuple(int(s) for s in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError("expected comma separated integers") from None


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="semival",
                                     description="Standard bases and value semirings of curves.")
    sub = parser.add_subparsers(dest="command", required=True)
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("document", help="curve document (YAML)")
    common.add_argument("--precision-override", type=int, metavar="N",
                        help="use precision N on every branch")
    common.add_argument("--sigma", type=_sigma, help="conductor bound, e.g. 29,15")
    common.add_argument("--format", choices=("human", "machine"), default="human")
    common.add_argument("--trace", action="store_true", help="include reduction traces")
    sub.add_parser("std-basis", parents=[common], help="minimal standard basis")
    sub.add_parser("semiring", parents=[common], help="value semiring and its special points")
    sub.add_parser("check", parents=[common], help="closure properties and structural checks")
    oracle = sub.add_parser("oracle", parents=[common], help="random membership test")
    oracle.add_argument("--samples", type=int, default=200)
    oracle.add_argument("--seed", type=int, default=1)
    oracle.add_argument("--max-degree", type=int, default=4)
    return parser


def execute(args) -> tuple:
    """Run one command; return (report, exit code)."""
    curve = load_curve(args.document)
    if args.precision_override is not None:
        curve = curve.with_precision(args.precision_override)
    r = pipeline.run(curve, args.sigma)
    report = pipeline.header(curve, args.command)
    report.update(pipeline.basis_section(r, args.trace))
    code = EXIT_OK
    if args.command == "semiring":
        report["semiring"] = pipeline.semiring_section(r)
    elif args.command == "check":
        report["checks"] = pipeline.check_section(r)
        if not report["checks"]["ok"]:
            code = EXIT_PROPERTY
    elif args.command == "oracle":
        report["oracle"] = pipeline.oracle_section(r, args.samples, args.seed, args.max_degree)
        if report["oracle"]["failed"]:
            code = EXIT_ORACLE
    return report, code


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        report, code = execute(args)
    except (ParseError, ValidationError, MissingData) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except PrecisionInsufficient as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PRECISION
    except (VerificationFailure, NonTermination) as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_VERIFICATION
    if args.format == "machine":
        sys.stdout.write(pipeline.dump_report(report))
    else:
        sys.stdout.write(pipeline.format_human(report))
    return code


if __name__ == "__main__":
    sys.exit(main())
