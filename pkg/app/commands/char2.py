"""char2: y^2 + Qy = P over F_{2^k}."""

from ..report import build_char2_report
from . import add_format_arguments, emit


def cmd_char2(args):
    report = build_char2_report(args.ext, args.g, args.Q, args.P)
    emit(args, report, "char2.txt.j2")
    return 0


def register(subparsers):
    parser = subparsers.add_parser("char2", help="hyperelliptic curve in characteristic 2")
    parser.add_argument("--ext", type=int, default=1, help="extension degree k of F_{2^k}")
    parser.add_argument("--g", type=int, required=True, help="genus")
    parser.add_argument("--Q", required=True, help="Q(x), degree at most g")
    parser.add_argument("--P", required=True, help="P(x), degree 2g+1")
    add_format_arguments(parser)
    parser.set_defaults(func=cmd_char2)
