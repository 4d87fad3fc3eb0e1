from apps.cli.io import (
    complex_from_doc,
    complex_payload,
    emit,
    ideal_from_doc,
    ideal_payload,
    md_table,
    parse_json_arg,
    read_complex,
    read_ideal,
    read_json,
)
from shared.errors import IdealError
from shared.ideals import monomial as mi
from shared.ideals.triangles import special_triangles, symbolic2_equals_square


def _ideal_or_complex(path, allow_ghosts):
    """Symbolic powers accept either a squarefree ideal or a complex document."""
    doc = read_json(path)
    if "facets" in doc:
        return complex_from_doc(doc, allow_ghost_vertices=allow_ghosts)
    return ideal_from_doc(doc)


def run(args) -> int:
    verb = args.verb
    if verb == "sr":
        ideal = mi.stanley_reisner(read_complex(args.input, allow_ghost_vertices=args.allow_ghosts))
        emit(args, ideal_payload(ideal), f"I = {ideal}")
        return 0
    if verb == "symbolic":
        ideal = mi.symbolic_power(_ideal_or_complex(args.input, args.allow_ghosts), args.ell)
        emit(args, ideal_payload(ideal), f"I^({args.ell}) = {ideal}")
        return 0
    ideal = read_ideal(args.input)
    if verb == "power":
        out = mi.power(ideal, args.k)
        emit(args, ideal_payload(out), f"I^{args.k} = {out}")
    elif verb in ("intersect", "equals"):
        if not args.other:
            raise IdealError(f"ideal {verb} needs --other")
        other = read_ideal(args.other)
        if verb == "intersect":
            out = mi.intersect(ideal, other)
            emit(args, ideal_payload(out), str(out))
        else:
            eq = mi.equals(ideal, other)
            emit(args, {"equal": eq}, f"equal: {eq}")
    elif verb == "contains":
        m = tuple(parse_json_arg(args.monomial or "[]", "--monomial", list, IdealError))
        if args.symbolic:
            found = mi.symbolic_contains(ideal, m, args.ell)
        else:
            found = mi.contains(ideal, m)
        emit(args, {"contains": found}, f"contains {mi.format_monomial(m)}: {found}")
    elif verb == "triangles":
        tris = special_triangles(ideal)
        payload = [{"vertices": list(t.vertices), "witnesses": t.witness_sets()} for t in tris]
        md = md_table(["triangle", "witness supports"], [(t.vertices, t.witness_sets()) for t in tris])
        emit(args, {"special_triangles": payload}, md)
    elif verb == "equals-sym2":
        v = symbolic2_equals_square(ideal)
        cert = None
        if v.triangle is not None:
            cert = {
                "triangle": list(v.triangle.vertices),
                "witnesses": v.triangle.witness_sets(),
                "monomial": list(v.monomial),
            }
        emit(args, {"equal": v.equal, "checked": v.checked, "certificate": cert}, f"I^(2) = I^2: {v.equal}")
    elif verb == "complex":
        emit(args, complex_payload(mi.complex_of_ideal(ideal)))
    elif verb == "radical":
        emit(args, ideal_payload(mi.radical(ideal)))
    return 0


def register(subparsers, common) -> None:
    p = subparsers.add_parser("ideal", parents=[common], help="monomial ideal arithmetic")
    p.add_argument(
        "verb",
        choices=[
            "sr", "power", "symbolic", "intersect", "equals", "contains",
            "triangles", "equals-sym2", "complex", "radical",
        ],
    )
    p.add_argument("--k", type=int, default=2)
    p.add_argument("--ell", type=int, default=2)
    p.add_argument("--other", help="second ideal document")
    p.add_argument("--monomial", help="JSON exponent vector, for 'contains'")
    p.add_argument("--symbolic", action="store_true", help="test membership in I^(ell) instead of I")
    p.set_defaults(handler=run)
