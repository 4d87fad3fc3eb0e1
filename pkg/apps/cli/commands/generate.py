from apps.cli.io import complex_payload, emit, parse_json_arg
from shared.complexes.named import COMPLEXES, ALIASES, named_complex

PARAMS = ("n", "d", "k", "r")


def run(args) -> int:
    params = {p: getattr(args, p) for p in PARAMS if getattr(args, p) is not None}
    if args.edges is not None:
        params["edges"] = parse_json_arg(args.edges, "--edges", list)
    delta = named_complex(args.name, **params)
    emit(args, complex_payload(delta, name=args.name))
    return 0


def register(subparsers, common) -> None:
    p = subparsers.add_parser("generate", parents=[common], help="built-in complexes")
    names = sorted(set(COMPLEXES) | set(ALIASES))
    p.add_argument("name", help="one of: " + ", ".join(n.replace("_", "-") for n in names))
    p.add_argument("--n", type=int)
    p.add_argument("--d", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--r", type=int)
    p.add_argument("--edges", help="JSON edge list, for 'complementary'")
    p.set_defaults(handler=run)
