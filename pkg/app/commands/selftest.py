"""selftest: rerun the worked examples and cross-checks."""

from ..report import render_text, to_json
from ..selftest import run_selftest
from . import add_format_arguments


def cmd_selftest(args):
    report = run_selftest(full=not args.quick)
    if args.fmt == "json":
        print(to_json(report))
    else:
        text = render_text(
            "selftest.txt.j2", checks=report.checks, passed=report.passed, campaign=report.campaign
        )
        print(text, end="")
    return 0 if report.ok else 1


def register(subparsers):
    parser = subparsers.add_parser("selftest", help="check the worked examples and the oracles")
    parser.add_argument("--quick", action="store_true", help="skip the exhaustive campaign sweep")
    add_format_arguments(parser)
    parser.set_defaults(func=cmd_selftest)
