"""Command-line front end: simulate, fit and bench."""

import argparse
import logging
import sys
from typing import List, Optional

from pydantic import ValidationError

from diffee.cli import bench, fit, simulate
from diffee.core.config import settings
from diffee.core.errors import DiffeeError
from diffee.core.logging import configure_logging

logger = logging.getLogger(__name__)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="diffee",
        description="Closed-form estimation of sparse differential Gaussian graphical models.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {settings.VERSION}")
    parser.add_argument(
        "--log-level",
        type=str.upper,
        choices=["DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"],
        help=f"logging level (default {settings.LOG_LEVEL})",
    )
    subparsers = parser.add_subparsers(dest="command", required=True)

    # Each subcommand module registers its own parser
    simulate.register(subparsers)
    fit.register(subparsers)
    bench.register(subparsers)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    """Entry point; returns 0 on success, 1 on runtime failure, 2 on usage error"""
    parser = build_parser()
    args = parser.parse_args(argv)
    configure_logging(args.log_level)
    try:
        return args.handler(args)
    except DiffeeError as exc:
        print(f"error: {exc.detail}", file=sys.stderr)
        return exc.exit_code
    except ValidationError as exc:
        print(f"error: invalid input: {exc}", file=sys.stderr)
        return 2
