"""Subcommands; each module exposes register(subparsers)."""

from ..report import render_text, to_json


def add_curve_arguments(parser):
    parser.add_argument("--p", type=int, required=True, help="characteristic")
    parser.add_argument("--ext", type=int, default=1, help="extension degree k of F_{p^k}")
    parser.add_argument("--n", type=int, required=True, help="cover degree")
    parser.add_argument("--f", required=True, help='polynomial in x, e.g. "x^2*(x+1)"')


def add_format_arguments(parser):
    group = parser.add_mutually_exclusive_group()
    group.add_argument("--json", dest="fmt", action="store_const", const="json", help="JSON output")
    group.add_argument("--text", dest="fmt", action="store_const", const="text", help="text output (default)")
    parser.set_defaults(fmt="text")


def emit(args, model, template, name="r"):
    if args.fmt == "json":
        print(to_json(model))
    else:
        print(render_text(template, **{name: model}), end="")
