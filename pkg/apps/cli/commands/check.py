from apps.cli.io import emit, md_table, read_complex
from shared.cohomology import takayama
from shared.criteria import checks
from shared.criteria.audit import paper_audit
from shared.errors import ImplicationViolation
from shared.homology import engine
from shared.schemas import HomologyDoc


def _verdict_doc(v: engine.Verdict) -> dict:
    return {"holds": v.holds, "field": v.field, "certificate": v.certificate, "details": v.details}


def _per_field(args, delta, fn):
    out = {}
    for fs in args.battery:
        out[fs.tag] = fn(delta, fs)
    return out


def _audit_markdown(report) -> str:
    rows = [(i.name, i.premise, i.conclusion, i.status) for i in report.implications]
    head = [
        f"## audit: {report.subject}",
        "",
        f"n = {report.n}, dim = {report.dim}, codim = {report.codim}, fields = {', '.join(report.field_battery)}",
        "",
        md_table(
            ["field", "CM", "Gorenstein", "CM I^2", "CM I^(2)"],
            [
                (tag, a.cohen_macaulay.holds, a.gorenstein.holds, a.cm_square.is_cm, a.cm_symbolic_square.is_cm)
                for tag, a in report.per_field.items()
            ],
        ),
        "",
        f"condition (2): {report.condition2_link_diameter.holds}; "
        f"condition (3): {report.condition3.holds if report.condition3 else 'skipped'}; "
        f"I^(2) = I^2: {report.sym2_direct}",
        "",
        md_table(["implication", "premise", "conclusion", "status"], rows),
    ]
    return "\n".join(head)


def run(args) -> int:
    delta = read_complex(args.input, allow_ghost_vertices=args.allow_ghosts)
    verb = args.verb
    scan = dict(budget=args.budget, jobs=args.jobs)

    if verb == "audit":
        report = paper_audit(delta, fields=[f.tag for f in args.battery], subject=args.subject, **scan)
        emit(args, report.dict(), _audit_markdown(report))
        if report.violations:
            raise ImplicationViolation([i.dict() for i in report.implications if i.status == "violated"], args.subject)
        return 0

    if verb in ("cm", "gorenstein", "locally-gorenstein"):
        fn = {
            "cm": engine.is_cohen_macaulay,
            "gorenstein": engine.is_gorenstein,
            "locally-gorenstein": engine.is_locally_gorenstein,
        }[verb]
        res = _per_field(args, delta, fn)
        emit(args, {tag: _verdict_doc(v) for tag, v in res.items()},
             md_table(["field", verb], [(t, v.holds) for t, v in res.items()]))
    elif verb == "homology":
        res = _per_field(args, delta, engine.reduced_homology)
        docs = {tag: HomologyDoc(**h.to_doc()) for tag, h in res.items()}
        emit(args, {tag: d.dict() for tag, d in docs.items()},
             md_table(["field", "betti"], [(t, d.betti) for t, d in docs.items()]))
    elif verb in ("cm-square", "cm-symbolic-square", "depth"):
        if verb == "cm-square":
            fn = lambda d, f: takayama.is_cm_square(d, f, **scan)
        elif verb == "cm-symbolic-square":
            fn = lambda d, f: takayama.is_cm_symbolic_square(d, f, **scan)
        elif args.target == "symbolic":
            fn = lambda d, f: takayama.is_cm_symbolic_square(d, f, **scan)
        elif args.target == "radical":
            fn = lambda d, f: takayama.is_cm_radical(d, f, **scan)
        else:
            fn = lambda d, f: takayama.is_cm_power(d, args.k, f, **scan)
        res = _per_field(args, delta, fn)
        emit(args, {tag: r.to_doc() for tag, r in res.items()},
             md_table(["field", "depth", "dim", "CM", "via"], [(t, r.depth, r.dim, r.is_cm, r.via) for t, r in res.items()]))
    elif verb == "s2":
        v = checks.s2_criterion(delta)
        emit(args, _verdict_doc(v), f"(S2) for S/I^(2): {v.holds}")
    elif verb == "depth2":
        v = checks.depth2_criterion(delta)
        emit(args, _verdict_doc(v), f"depth S/I^(2) >= 2: {v.holds} (diameter {v.details['diameter']})")
    elif verb == "condition3":
        v = checks.condition3_check(delta)
        emit(args, _verdict_doc(v), f"condition (3): {v.holds}")
    return 0


def register(subparsers, common) -> None:
    p = subparsers.add_parser("check", parents=[common], help="homological and combinatorial criteria")
    p.add_argument(
        "verb",
        choices=[
            "cm", "gorenstein", "locally-gorenstein", "homology", "s2", "depth2", "depth",
            "cm-square", "cm-symbolic-square", "condition3", "audit",
        ],
    )
    p.add_argument("--target", choices=["power", "symbolic", "radical"], default="power", help="quotient for 'depth'")
    p.add_argument("--k", type=int, default=2, help="power for 'depth --target power'")
    p.add_argument("--subject", default="input")
    p.set_defaults(handler=run)
