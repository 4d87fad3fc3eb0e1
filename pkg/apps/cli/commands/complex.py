from apps.cli.io import complex_payload, emit, md_table, parse_json_arg, read_complex
from shared.complexes import simplicial as cx
from shared.complexes.graphs import graph_diameter, one_skeleton
from shared.criteria.checks import diameter_value
from shared.errors import ComplexError


def _face(text, option="--face"):
    return parse_json_arg(text, option, list)


def _relabeled(args, rel: cx.Relabeled):
    vmap = {str(k): v for k, v in sorted(rel.vertex_map.items())}
    emit(args, complex_payload(rel.complex, vertex_map=vmap))


def run(args) -> int:
    verb = args.verb
    if verb == "new":
        if args.n is None or args.facets is None:
            raise ComplexError("complex new needs --n and --facets")
        delta = cx.new_complex(args.n, _face(args.facets, "--facets"), allow_ghost_vertices=args.allow_ghosts)
        emit(args, complex_payload(delta))
        return 0
    delta = read_complex(args.input, allow_ghost_vertices=args.allow_ghosts)
    if verb in ("link", "star"):
        op = cx.link if verb == "link" else cx.star
        _relabeled(args, op(delta, _face(args.face or "[]")))
    elif verb == "skeleton":
        emit(args, complex_payload(cx.skeleton(delta, args.k)))
    elif verb == "restrict":
        _relabeled(args, cx.restrict(delta, _face(args.vertices or "[]", "--vertices")))
    elif verb == "core":
        _relabeled(args, cx.core(delta))
    elif verb == "join":
        if not args.other:
            raise ComplexError("complex join needs --other")
        other = read_complex(args.other, allow_ghost_vertices=args.allow_ghosts)
        emit(args, complex_payload(cx.join(delta, other)))
    elif verb == "stellar":
        emit(args, complex_payload(cx.stellar_subdivision(delta, _face(args.face or "[]"))))
    elif verb == "cone":
        emit(args, complex_payload(cx.cone(delta)))
    elif verb == "relabel":
        raw = parse_json_arg(args.map or "{}", "--map", dict)
        try:
            mapping = {int(k): int(v) for k, v in raw.items()}
        except (TypeError, ValueError) as e:
            raise ComplexError(f"--map must map vertices to vertices: {e}") from e
        emit(args, complex_payload(cx.relabel(delta, mapping)))
    elif verb == "fvector":
        fv = cx.f_vector(delta)
        md = md_table(["i", "f_i"], list(enumerate(fv.f))) + f"\n\nreduced Euler characteristic: {fv.euler}"
        emit(args, {"f": list(fv.f), "euler": fv.euler}, md)
    elif verb == "diameter":
        d = diameter_value(graph_diameter(one_skeleton(delta)))
        emit(args, {"diameter": d}, f"diameter of the 1-skeleton: {d}")
    return 0


def register(subparsers, common) -> None:
    p = subparsers.add_parser("complex", parents=[common], help="construct and transform simplicial complexes")
    p.add_argument(
        "verb",
        choices=[
            "new", "link", "star", "skeleton", "restrict", "core", "join",
            "stellar", "cone", "relabel", "fvector", "diameter",
        ],
    )
    p.add_argument("--n", type=int)
    p.add_argument("--facets", help="JSON list of faces, for 'new'")
    p.add_argument("--face", help="JSON list of vertices")
    p.add_argument("--vertices", help="JSON list of vertices, for 'restrict'")
    p.add_argument("--k", type=int, default=1)
    p.add_argument("--other", help="second complex document, for 'join'")
    p.add_argument("--map", help='JSON object old -> new, for "relabel"')
    p.set_defaults(handler=run)
