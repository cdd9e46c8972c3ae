"""
Command Line Interface

One subcommand per area, each registered from app.commands. Reports go to
stdout and diagnostics to stderr. Exit codes: 0 on success, 2 when the
input is not a valid curve or search, 1 when an internal check fails.
"""

import argparse
import logging
import sys

from pydantic import ValidationError

from .commands import analyze, char2, search, selftest
from .errors import CurveValidationError, FieldError, ParseError, SearchSpaceTooLarge

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_INTERNAL = 1
EXIT_INVALID = 2

INVALID_INPUT = (CurveValidationError, ParseError, SearchSpaceTooLarge, FieldError, ValidationError)


def configure_logging(verbosity):
    level = logging.WARNING
    if verbosity == 1:
        level = logging.INFO
    elif verbosity >= 2:
        level = logging.DEBUG
    logging.basicConfig(
        level=level,
        format="%(levelname)s %(name)s: %(message)s",
        stream=sys.stderr,
        force=True,
    )


def build_parser():
    parser = argparse.ArgumentParser(
        prog="kummer-hw",
        description="Hasse-Witt matrices, a-numbers and p-ranks of Kummer covers over finite fields",
    )
    parser.add_argument("-v", "--verbose", action="count", default=0, help="-v for progress, -vv for details")
    subparsers = parser.add_subparsers(dest="command", required=True)
    for module in (analyze, char2, search, selftest):
        module.register(subparsers)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    configure_logging(args.verbose)
    try:
        return args.func(args)
    except INVALID_INPUT as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except AssertionError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
