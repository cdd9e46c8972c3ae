"""analyze and bounds: one Kummer cover y^n = f."""

from ..report import build_bounds_output, build_invariant_report
from . import add_curve_arguments, add_format_arguments, emit


def cmd_analyze(args):
    report = build_invariant_report(args.p, args.ext, args.n, args.f)
    emit(args, report, "analyze.txt.j2")
    return 0


def cmd_bounds(args):
    output = build_bounds_output(args.p, args.ext, args.n, args.f)
    emit(args, output, "bounds.txt.j2")
    return 0


def register(subparsers):
    parser = subparsers.add_parser("analyze", help="genus, Frobenius matrix, a-number, p-rank and bounds")
    add_curve_arguments(parser)
    add_format_arguments(parser)
    parser.set_defaults(func=cmd_analyze)

    parser = subparsers.add_parser("bounds", help="bounds from m_i and deg Q_i only")
    add_curve_arguments(parser)
    add_format_arguments(parser)
    parser.set_defaults(func=cmd_bounds)
