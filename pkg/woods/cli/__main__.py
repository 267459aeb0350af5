"""Command line entrypoint: ``python -m woods.cli <command> ...``."""

from __future__ import annotations

import argparse
import logging
import sys
from pathlib import Path
from typing import Sequence

from woods.cli.commands import COMMANDS
from woods.cli.config import CliConfig
from woods.cli.config import OutputFormat
from woods.cli.output import render
from woods.errors import EnumerationBudgetExceeded
from woods.errors import UndecidedComparison
from woods.errors import WoodsError


logger = logging.getLogger("woods.cli")

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_BUDGET = 2
EXIT_UNDECIDED = 3


def _add_lattice(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("lattice", help="Catalog name, Z (with --n) or a *.gram.json path")
    parser.add_argument("--n", type=int, help="Dimension for the parametric lattice Z")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="woods",
        description="Certified lattice counterexamples to Woods's conjecture",
    )
    parser.add_argument("--data-dir", type=Path, help="Catalog directory (env WOODS_DATA_DIR)")
    parser.add_argument("--precision-bits", type=int, help="Interval precision ceiling")
    parser.add_argument("--budget", type=int, help="Enumeration node budget")
    parser.add_argument("--seed", type=int, default=0, help="Seed for randomized searches")
    parser.add_argument(
        "--output",
        choices=[fmt.value for fmt in OutputFormat],
        default=OutputFormat.PRETTY.value,
        help="Report format",
    )
    parser.add_argument("--log-level", default="WARNING", help="Logging level for stderr")
    sub = parser.add_subparsers(dest="command", required=True)

    svp = sub.add_parser("svp", help="Shortest vectors, minimum and kissing number")
    _add_lattice(svp)

    cvp = sub.add_parser("cvp", help="Exact distance to the lattice and the closest points")
    _add_lattice(cvp)
    cvp.add_argument("--target", required=True, help="Comma separated p/q coordinates")
    cvp.add_argument("--max-points", type=int, default=1000, help="Closest points to list")

    rounded = sub.add_parser("wellrounded", help="Well-roundedness and generation by minima")
    _add_lattice(rounded)

    cert = sub.add_parser("covering-cert", help="Certify a covering lower bound from a witness")
    _add_lattice(cert)
    cert.add_argument("--witness", help="Comma separated p/q coordinates (default: catalog)")
    cert.add_argument("--claimed", help="Claimed lower bound, e.g. 7*2^(2/5)")

    hole = sub.add_parser("deep-hole", help="Search for a deep hole witness")
    _add_lattice(hole)
    hole.add_argument("--restarts", type=int, default=4, help="Random restarts per block")

    construct = sub.add_parser("construct", help="Build and certify alpha1 B + alpha2 Z^m")
    construct.add_argument("--base", required=True, help="Catalog base lattice")
    construct.add_argument("--dim", type=int, required=True, help="Total dimension d")
    construct.add_argument("--n", type=int, help="Dimension of a Z base")

    thresholds = sub.add_parser("thresholds", help="Threshold dimension per catalog base")
    thresholds.add_argument("--d-max", type=int, default=200, help="Largest dimension scanned")
    thresholds.add_argument("--base", action="append", help="Restrict to these bases")

    scan = sub.add_parser("scan", help="Asymptotic lower bounds C / (d^2 / ln d)")
    scan.add_argument("--from", dest="start", type=int, required=True, help="First dimension")
    scan.add_argument("--to", type=int, required=True, help="Last dimension")
    scan.add_argument("--step", type=int, default=1, help="Dimension step")
    scan.add_argument("--bits", type=int, default=64, help="Interval precision of the rows")
    scan.add_argument(
        "--with-catalog",
        action="store_true",
        help="Add the best certified catalog construction per row",
    )

    verify = sub.add_parser("verify", help="Recompute and certify catalog constants")
    verify.add_argument("name", nargs="?", help="Catalog entry")
    verify.add_argument("--all", action="store_true", help="Verify every shipped entry")
    verify.add_argument("--skip-slow", action="store_true", help="Skip entries marked slow")
    verify.add_argument("--n", type=int, help="Dimension for the parametric lattice Z")

    sub.add_parser("catalog", help="List catalog entries")
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(
        level=args.log_level.upper(),
        format="%(levelname)s %(name)s: %(message)s",
        stream=sys.stderr,
    )
    try:
        config = CliConfig.from_env(
            data_dir=args.data_dir,
            precision_bits=args.precision_bits,
            enum_budget=args.budget,
            output=args.output,
            seed=args.seed,
            log_level=args.log_level,
        )
        result = COMMANDS[args.command](args, config)
    except EnumerationBudgetExceeded as exc:
        logger.error("%s", exc)
        return EXIT_BUDGET
    except UndecidedComparison as exc:
        logger.error("%s", exc)
        return EXIT_UNDECIDED
    except (WoodsError, ValueError, KeyError) as exc:
        logger.error("%s: %s", type(exc).__name__, exc)
        return EXIT_INPUT

    print(render(result.payload, config.output, result.pretty))
    return result.exit_code


if __name__ == "__main__":
    sys.exit(main())
