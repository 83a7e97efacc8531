"""Command-line entry point.

    palatini fixture      [--json] [--no-timings] [--plot-dir DIR]
    palatini random       [--seed S] [--prime P] [--count N] [--field fp|q] ...
    palatini verify PATH  [--prime P] [--seed S] ...
    palatini enumerative  [--degree K] ...

Exit codes: 0 all required checks pass, 1 a check failed, 2 usage or input error.
"""
from __future__ import annotations

import argparse
import sys
from typing import List, Optional

from .field import DEFAULT_PRIME, QQ, PrimeField, is_prime
from .quartic import SkewSystemError
from .skewio import SystemFormatError, load_system
from . import suites


def _prime(text: str) -> int:
    try:
        p = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"{text!r} is not an integer") from None
    if not is_prime(p):
        raise argparse.ArgumentTypeError(f"{p} is not prime")
    if p >= 2**31:
        raise argparse.ArgumentTypeError(f"{p} must be below 2^31")
    return p


def _seed(text: str) -> int:
    try:
        s = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"{text!r} is not an integer") from None
    if not 0 <= s < 2**64:
        raise argparse.ArgumentTypeError("seed must fit in an unsigned 64-bit integer")
    return s


def _count(text: str) -> int:
    n = int(text)
    if n < 1:
        raise argparse.ArgumentTypeError("count must be positive")
    return n


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=_seed, default=1, help="seed for every random draw (default 1)")
    common.add_argument("--prime", type=_prime, default=DEFAULT_PRIME, help=f"prime modulus (default {DEFAULT_PRIME})")
    common.add_argument("--count", type=_count, default=1, help="number of random systems")
    common.add_argument("--field", choices=("fp", "q"), default=None,
                        help="coefficient field (random: default fp; fixture: default q)")
    common.add_argument("--json", action="store_true", help="emit one JSON document instead of text")
    common.add_argument("--no-timings", action="store_true", help="omit wall-clock timings (byte-stable output)")
    common.add_argument("--plot-dir", default=None, help="write figures into this directory")
    common.add_argument("-o", "--output", default=None, help="also write the report to this file")

    parser = argparse.ArgumentParser(prog="palatini", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("fixture", parents=[common], help="checks on the five explicit matrices and W_M")
    sub.add_parser("random", parents=[common], help="end-to-end checks on random generic systems")
    pv = sub.add_parser("verify", parents=[common], help="profile a skew system read from a JSON file")
    pv.add_argument("path")
    pe = sub.add_parser("enumerative", parents=[common], help="Chern, Porteous and Schubert number table")
    pe.add_argument("--degree", type=int, default=None, help="also print chi(I(k)) for this k")
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)

    if args.command == "fixture":
        field = PrimeField(args.prime) if args.field == "fp" else QQ
        report = suites.fixture_report(field, args.plot_dir)
    elif args.command == "random":
        report = suites.random_report(args.seed, args.prime, args.count, args.field or "fp", args.plot_dir)
    elif args.command == "verify":
        try:
            system = load_system(args.path)
        except OSError as exc:
            print(f"palatini: cannot read {args.path}: {exc.strerror}", file=sys.stderr)
            return 2
        except (SystemFormatError, SkewSystemError) as exc:
            print(f"palatini: invalid skew system in {args.path}: {exc}", file=sys.stderr)
            return 2
        report = suites.verify_report(system, args.prime, args.seed, args.plot_dir, source=args.path)
    else:
        report = suites.enumerative_report(args.degree, args.plot_dir)

    timings = not args.no_timings
    text = report.to_json(timings) + "\n" if args.json else report.to_text(timings)
    sys.stdout.write(text)
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text)
    return report.exit_code


if __name__ == "__main__":
    sys.exit(main())
