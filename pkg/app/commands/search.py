"""search and campaign: enumerations over coefficient spaces."""

from ..campaign import genus4_char11_campaign
from ..search import SearchSpec, enumerate_family, write_census, write_witnesses
from . import add_format_arguments, emit


def _spec_from_args(args):
    free = None
    if args.free:
        free = [int(e) for e in args.free.split(",")]
    return SearchSpec(
        p=args.p,
        k=args.ext,
        family=args.family,
        n=args.n,
        degree=args.deg,
        g=args.g,
        free=free,
        monic=not args.not_monic,
        squarefree=args.squarefree,
        filter=args.filter,
        filter_value=args.value,
        limit=args.limit,
    )


def cmd_search(args):
    spec = _spec_from_args(args)
    census = enumerate_family(spec, workers=args.workers, witness_cap=args.witness_cap)
    if args.out:
        write_census(census, args.out)
    if args.witnesses:
        write_witnesses(census, args.witnesses)
    emit(args, census, "census.txt.j2", name="c")
    return 0


def cmd_campaign(args):
    report = genus4_char11_campaign(seed=args.seed, samples=args.samples, run_sweep=not args.no_sweep)
    emit(args, report, "campaign.txt.j2", name="campaign")
    return 0 if report.passed else 1


def register(subparsers):
    parser = subparsers.add_parser("search", help="census of a curve family over a small field")
    parser.add_argument("--p", type=int, required=True)
    parser.add_argument("--ext", type=int, default=1)
    parser.add_argument("--family", choices=("kummer", "char2"), default="kummer")
    parser.add_argument("--n", type=int, default=2)
    parser.add_argument("--deg", type=int, help="degree of f (kummer)")
    parser.add_argument("--g", type=int, help="genus (char2)")
    parser.add_argument("--free", help="comma separated exponents that vary, default all below deg")
    parser.add_argument("--not-monic", action="store_true", help="also vary the leading coefficient")
    parser.add_argument("--squarefree", action="store_true", default=None, help="only square-free f")
    parser.add_argument("--no-squarefree", dest="squarefree", action="store_false")
    parser.add_argument("--filter", choices=("all", "superspecial", "a_number", "p_rank"), default="all")
    parser.add_argument("--value", type=int, help="value for the a_number and p_rank filters")
    parser.add_argument("--limit", type=int, help="largest search space to accept")
    parser.add_argument("--workers", type=int, help="worker processes, 0 for all CPUs")
    parser.add_argument("--witness-cap", type=int, help="witnesses to keep")
    parser.add_argument("--out", help="write the census CSV here")
    parser.add_argument("--witnesses", help="write one witness per line here")
    add_format_arguments(parser)
    parser.set_defaults(func=cmd_search)

    parser = subparsers.add_parser("campaign", help="genus 4 superspecial search in characteristic 11")
    parser.add_argument("--samples", type=int, default=1000, help="random tuples for the b_18 check")
    parser.add_argument("--seed", type=int, help="random seed, default from settings")
    parser.add_argument("--no-sweep", action="store_true", help="skip the exhaustive F_11 sweep")
    add_format_arguments(parser)
    parser.set_defaults(func=cmd_campaign)
