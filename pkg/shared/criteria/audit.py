from typing import Dict, List, Optional, Sequence

from shared.cohomology.takayama import (
    DepthReport,
    is_cm_radical,
    is_cm_square,
    is_cm_symbolic_square,
)
from shared.complexes.simplicial import SimplicialComplex
from shared.config import get_settings
from shared.criteria.checks import condition3_check, depth2_criterion, link_diameter_condition, s2_criterion
from shared.errors import BruteForceBoundError
from shared.homology.engine import (
    F2,
    FieldSpec,
    Verdict,
    is_cohen_macaulay,
    is_gorenstein,
    is_locally_gorenstein,
    parse_fields,
)
from shared.ideals.monomial import equals, power, stanley_reisner, symbolic_power
from shared.ideals.triangles import symbolic2_equals_square
from shared.log import get_logger
from shared.schemas.reports import AuditReport, DepthReportDoc, FieldAudit, ImplicationItem, VerdictDoc

logger = get_logger(__name__)


def _vdoc(v: Verdict) -> VerdictDoc:
    return VerdictDoc(holds=v.holds, field=v.field, certificate=v.certificate, details=v.details)


def _ddoc(r: DepthReport) -> DepthReportDoc:
    return DepthReportDoc(**r.to_doc())


def implies(name: str, premise: bool, conclusion: bool, note: Optional[str] = None) -> ImplicationItem:
    if not premise:
        status = "vacuous"
    else:
        status = "ok" if conclusion else "violated"
    return ImplicationItem(name=name, premise=premise, conclusion=conclusion, status=status, note=note)


def iff(name: str, left: bool, right: bool, note: Optional[str] = None) -> ImplicationItem:
    return ImplicationItem(
        name=name, kind="iff", premise=left, conclusion=right, status="ok" if left == right else "violated", note=note
    )


def unchecked(name: str, note: str) -> ImplicationItem:
    return ImplicationItem(name=name, status="unchecked", note=note)


def _sym2_direct(delta: SimplicialComplex, ideal) -> bool:
    return equals(power(ideal, 2), symbolic_power(delta, 2)) if not ideal.is_zero else True


def paper_audit(
    delta: SimplicialComplex,
    fields: Optional[Sequence] = None,
    budget: Optional[int] = None,
    jobs: Optional[int] = None,
    subject: str = "complex",
) -> AuditReport:
    """Evaluate every criterion on Δ and check the implications between them.

    Field-dependent statements are relative to the battery: "Gorenstein" means
    Gorenstein over every field in ``fields``.
    """
    settings = get_settings()
    battery: List[FieldSpec] = parse_fields(fields if fields is not None else settings.fields)
    ideal = stanley_reisner(delta)
    dim = delta.dim
    codim = delta.n - (dim + 1)

    per_field: Dict[str, FieldAudit] = {}
    for fs in battery:
        per_field[fs.tag] = FieldAudit(
            cohen_macaulay=_vdoc(is_cohen_macaulay(delta, fs)),
            gorenstein=_vdoc(is_gorenstein(delta, fs)),
            locally_gorenstein=_vdoc(is_locally_gorenstein(delta, fs)),
            cm_square=_ddoc(is_cm_square(delta, fs, budget=budget, jobs=jobs)),
            cm_symbolic_square=_ddoc(is_cm_symbolic_square(delta, fs, budget=budget, jobs=jobs)),
            cm_radical=_ddoc(is_cm_radical(delta, fs, budget=budget, jobs=jobs)),
        )

    cond2 = link_diameter_condition(delta)
    s2 = s2_criterion(delta) if delta.is_pure else None
    try:
        cond3: Optional[Verdict] = condition3_check(delta)
    except BruteForceBoundError as e:
        logger.info("condition (3) skipped for %s: %s", subject, e)
        cond3 = None
    tri = symbolic2_equals_square(ideal)
    direct = _sym2_direct(delta, ideal)
    depth2 = depth2_criterion(delta) if dim >= 1 else None

    gor_all = all(a.gorenstein.holds for a in per_field.values())
    cm_sq_all = all(a.cm_square.is_cm for a in per_field.values())
    loc_all = all(a.locally_gorenstein.holds for a in per_field.values())

    items: List[ImplicationItem] = []
    if F2 in battery:
        items.append(implies("cm-square-implies-gorenstein", cm_sq_all, gor_all))
    else:
        items.append(unchecked("cm-square-implies-gorenstein", "asserted only with F2 in the battery"))
    items.append(implies("cm-square-implies-conditions-2-3", cm_sq_all, cond2.holds and tri.equal))
    items.append(implies("cm-square-implies-locally-gorenstein", cm_sq_all, loc_all))
    items.append(iff("triangles-iff-direct-equality", tri.equal, direct))
    if cond3 is not None:
        items.append(iff("condition3-iff-direct-equality", cond3.holds, direct))
    for tag, a in per_field.items():
        items.append(
            iff(f"cm-square-iff-cm-symbolic-and-equal[{tag}]", a.cm_square.is_cm, a.cm_symbolic_square.is_cm and direct)
        )
        items.append(iff(f"reisner-iff-takayama[{tag}]", a.cohen_macaulay.holds, a.cm_radical.is_cm))
        items.append(
            implies(f"codim3-gorenstein-implies-cm-square[{tag}]", a.gorenstein.holds and codim == 3, a.cm_square.is_cm)
        )
        if depth2 is not None:
            sym_depth = a.cm_symbolic_square.depth
            items.append(iff(f"diameter-iff-symbolic-depth2[{tag}]", depth2.holds, sym_depth >= 2))

    violations = [i.name for i in items if i.status == "violated"]
    if violations:
        logger.error("implication violated on %s: %s", subject, ", ".join(violations))
    else:
        logger.info("audit of %s: %d implications, none violated", subject, len(items))

    return AuditReport(
        subject=subject,
        n=delta.n,
        facets=[list(f) for f in delta.facet_sets()],
        field_battery=[fs.tag for fs in battery],
        dim=dim,
        codim=codim,
        condition1_gorenstein={tag: a.gorenstein.holds for tag, a in per_field.items()},
        condition2_link_diameter=_vdoc(cond2),
        s2_criterion=_vdoc(s2) if s2 is not None else None,
        condition3=_vdoc(cond3) if cond3 is not None else None,
        sym2_triangles=VerdictDoc(
            holds=tri.equal,
            certificate=(
                {"triangle": list(tri.triangle.vertices), "witnesses": tri.triangle.witness_sets(), "monomial": list(tri.monomial)}
                if tri.triangle is not None
                else None
            ),
            details={"checked": tri.checked},
        ),
        sym2_direct=direct,
        depth2_criterion=_vdoc(depth2) if depth2 is not None else None,
        per_field=per_field,
        implications=items,
        violations=violations,
    )


def oracle_equivalences(
    delta: SimplicialComplex,
    fields: Optional[Sequence] = None,
    budget: Optional[int] = None,
    jobs: Optional[int] = None,
) -> List[ImplicationItem]:
    """The equivalences that must agree with a direct computation on every complex."""
    battery = parse_fields(fields if fields is not None else get_settings().fields)
    ideal = stanley_reisner(delta)
    direct = _sym2_direct(delta, ideal)
    items = [iff("triangles-iff-direct-equality", symbolic2_equals_square(ideal).equal, direct)]
    try:
        items.append(iff("condition3-iff-direct-equality", condition3_check(delta).holds, direct))
    except BruteForceBoundError as e:
        items.append(unchecked("condition3-iff-direct-equality", str(e)))
    depth2 = depth2_criterion(delta) if delta.dim >= 1 else None
    for fs in battery:
        rad = is_cm_radical(delta, fs, budget=budget, jobs=jobs)
        items.append(iff(f"reisner-iff-takayama[{fs.tag}]", is_cohen_macaulay(delta, fs).holds, rad.is_cm))
        if depth2 is not None:
            sym = is_cm_symbolic_square(delta, fs, budget=budget, jobs=jobs)
            items.append(iff(f"diameter-iff-symbolic-depth2[{fs.tag}]", depth2.holds, sym.depth >= 2))
    return items
