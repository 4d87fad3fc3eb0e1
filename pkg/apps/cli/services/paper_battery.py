"""The reproduce battery: worked examples, oracle equivalences and implication audits.

Each check returns ``(passed, details)``; ``passed is None`` marks a
record-only entry that never affects the outcome.
"""

import time
from dataclasses import dataclass
from itertools import chain
from typing import Any, Callable, Dict, Iterable, List, Optional, Sequence, Tuple

import networkx as nx
import numpy as np

from shared.cohomology import is_cm_square, is_cm_symbolic_square
from shared.complexes import (
    SimplicialComplex,
    f_vector,
    link,
    new_complex,
    named_complex,
    one_skeleton,
    relabel,
)
from shared.config import get_settings
from shared.criteria import (
    exhaustive_pure_complexes,
    oracle_equivalences,
    paper_audit,
    random_pure_complex,
    s2_criterion,
)
from shared.errors import BudgetExceededError
from shared.homology import F2, RATIONALS, FieldSpec, is_cohen_macaulay, is_gorenstein, parse_fields
from shared.ideals import (
    add,
    contains,
    equals,
    new_ideal,
    power,
    stanley_reisner,
    symbolic2_equals_square,
    symbolic_contains,
    symbolic_power,
)
from shared.ideals.triangles import special_triangles
from shared.log import get_logger
from shared.schemas.reports import BatteryReport, CheckResultDoc

logger = get_logger(__name__)

Outcome = Tuple[Optional[bool], Dict[str, Any]]

# cross_polytope_stellar(2) is the cycle 1-5-2-3-4; this sends it onto 1-2-3-4-5
STELLAR_SQUARE_TO_PENTAGON = {1: 1, 5: 2, 2: 3, 3: 4, 4: 5}

# the split budget that forces the two-pentagon join onto its factors
FACTOR_BUDGET = 1000


@dataclass
class BatteryContext:
    fields: List[FieldSpec]
    budget: int
    seed: int
    jobs: int = 1
    oracle_n_max: int = 5
    oracle_random: int = 200

    def scan(self) -> Dict[str, int]:
        return {"budget": self.budget, "jobs": self.jobs}


def check_triangle_ideal(ctx: BatteryContext) -> Outcome:
    ideal = new_ideal(3, [(1, 1, 0), (0, 1, 1), (1, 0, 1)])
    square = power(ideal, 2)
    sym = symbolic_power(ideal, 2)
    expected = add(square, new_ideal(3, [(1, 1, 1)]))
    passed = sym.gens == expected.gens and not equals(sym, square)
    return passed, {"symbolic_square": [list(g) for g in sym.gens], "square": [list(g) for g in square.gens]}


def check_pentagon(ctx: BatteryContext) -> Outcome:
    delta = named_complex("pentagon")
    ideal = stanley_reisner(delta)
    triangles = special_triangles(ideal)
    equal = equals(power(ideal, 2), symbolic_power(delta, 2))
    cm_sq = {fs.tag: is_cm_square(delta, fs, **ctx.scan()).is_cm for fs in ctx.fields}
    gor = {fs.tag: is_gorenstein(delta, fs).holds for fs in ctx.fields}
    passed = not triangles and equal and all(cm_sq.values()) and all(gor.values())
    return passed, {"special_triangles": len(triangles), "sym2_equal": equal, "cm_square": cm_sq, "gorenstein": gor}


def _is_pentagon(delta: SimplicialComplex) -> bool:
    g = one_skeleton(delta).to_networkx()
    return delta.dim == 1 and nx.is_isomorphic(g, nx.cycle_graph(5))


def check_rp2(ctx: BatteryContext) -> Outcome:
    delta = named_complex("rp2")
    fv = f_vector(delta)
    ideal = stanley_reisner(delta)
    top = (1,) * 6
    cm = {fs.tag: is_cohen_macaulay(delta, fs).holds for fs in (RATIONALS, F2)}
    gor = {fs.tag: is_gorenstein(delta, fs).holds for fs in (RATIONALS, F2)}
    links = [_is_pentagon(link(delta, [v]).complex) for v in range(1, 7)]
    s2 = s2_criterion(delta).holds
    sym_cm = {fs.tag: is_cm_symbolic_square(delta, fs, **ctx.scan()).is_cm for fs in (RATIONALS, F2)}
    top_in = symbolic_contains(delta, top, 2) and not contains(power(ideal, 2), top)
    sym2 = symbolic2_equals_square(ideal).equal
    passed = (
        fv.f == (6, 15, 10)
        and fv.euler == 0
        and cm == {"Q": True, "F2": False}
        and not any(gor.values())
        and all(links)
        and s2
        and not any(sym_cm.values())
        and top_in
        and not sym2
    )
    details = {
        "f_vector": list(fv.f),
        "euler": fv.euler,
        "cohen_macaulay": cm,
        "gorenstein": gor,
        "pentagon_links": sum(links),
        "s2": s2,
        "cm_symbolic_square": sym_cm,
        "x1..x6_in_symbolic_not_square": top_in,
        "sym2_equal": sym2,
    }
    return passed, details


def check_phantom_pentagon(ctx: BatteryContext) -> Outcome:
    delta = named_complex("phantom_pentagon", k=2)
    sym = {fs.tag: is_cm_symbolic_square(delta, fs, **ctx.scan()).is_cm for fs in ctx.fields}
    sq = {fs.tag: is_cm_square(delta, fs, **ctx.scan()).is_cm for fs in ctx.fields}
    gor = {fs.tag: is_gorenstein(delta, fs).holds for fs in ctx.fields}
    passed = all(sym.values()) and not any(sq.values()) and not any(gor.values())
    return passed, {"cm_symbolic_square": sym, "cm_square": sq, "gorenstein": gor}


def check_four_path(ctx: BatteryContext) -> Outcome:
    delta = named_complex("four_path")
    cm = {fs.tag: is_cohen_macaulay(delta, fs).holds for fs in ctx.fields}
    gor = {fs.tag: is_gorenstein(delta, fs).holds for fs in ctx.fields}
    reports = {fs.tag: is_cm_square(delta, fs, **ctx.scan()) for fs in ctx.fields}
    dims = {r.dim for r in reports.values()}
    passed = all(cm.values()) and not any(gor.values()) and not any(r.is_cm for r in reports.values()) and dims == {2}
    return passed, {
        "cohen_macaulay": cm,
        "gorenstein": gor,
        "cm_square": {t: r.is_cm for t, r in reports.items()},
        "depth_square": {t: r.depth for t, r in reports.items()},
        "dim": sorted(dims),
    }


def check_cross_polytope_stellar(ctx: BatteryContext) -> Outcome:
    square = relabel(named_complex("cross_polytope_stellar", d=2), STELLAR_SQUARE_TO_PENTAGON)
    same = equals(stanley_reisner(square), stanley_reisner(named_complex("pentagon")))
    delta = named_complex("cross_polytope_stellar", d=3)
    reports = {fs.tag: is_cm_square(delta, fs, **ctx.scan()) for fs in ctx.fields}
    passed = same and all(r.is_cm for r in reports.values())
    return passed, {
        "d2_is_pentagon": same,
        "d3_cm_square": {t: r.is_cm for t, r in reports.items()},
        "d3_search_space": {t: r.search_space for t, r in reports.items()},
    }


def check_disjoint_pentagons(ctx: BatteryContext) -> Outcome:
    delta = named_complex("disjoint_pentagons", r=2)
    sym2 = symbolic2_equals_square(stanley_reisner(delta)).equal
    direct = {fs.tag: is_cm_square(delta, fs, **ctx.scan()) for fs in ctx.fields}
    split = {fs.tag: is_cm_square(delta, fs, budget=FACTOR_BUDGET, jobs=ctx.jobs) for fs in ctx.fields}
    split_ok = all(r.via == "join-factors" and len(r.factors) == 2 and r.is_cm for r in split.values())
    split_ok = split_ok and all(f["report"]["is_cm"] for r in split.values() for f in r.factors)
    passed = sym2 and all(r.is_cm for r in direct.values()) and split_ok
    return passed, {
        "sym2_equal": sym2,
        "cm_square": {t: {"is_cm": r.is_cm, "via": r.via} for t, r in direct.items()},
        "factor_fallback": {t: {"is_cm": r.is_cm, "via": r.via, "factors": len(r.factors)} for t, r in split.items()},
    }


def _oracle_complexes(ctx: BatteryContext) -> Iterable[SimplicialComplex]:
    exhaustive = chain.from_iterable(exhaustive_pure_complexes(n) for n in range(2, ctx.oracle_n_max + 1))
    rng = np.random.default_rng(ctx.seed)

    def randoms():
        for _ in range(ctx.oracle_random):
            n = int(rng.integers(6, 8))
            yield random_pure_complex(rng, n, int(rng.integers(1, n)))

    return chain(exhaustive, randoms())


def check_oracle_equivalences(ctx: BatteryContext) -> Outcome:
    checked = skipped = 0
    discrepancies: List[Dict[str, Any]] = []
    for delta in _oracle_complexes(ctx):
        try:
            items = oracle_equivalences(delta, fields=ctx.fields, **ctx.scan())
        except BudgetExceededError as e:
            logger.debug("oracle skipped %s: %s", delta.facet_sets(), e)
            skipped += 1
            continue
        checked += 1
        bad = [i.name for i in items if i.status == "violated"]
        if bad:
            logger.error("oracle discrepancy on %s: %s", delta.facet_sets(), ", ".join(bad))
            discrepancies.append({"n": delta.n, "facets": [list(f) for f in delta.facet_sets()], "items": bad})
    return not discrepancies and checked > 0, {
        "checked": checked,
        "skipped": skipped,
        "discrepancies": discrepancies,
    }


AUDIT_SUBJECTS: Sequence[Tuple[str, Dict[str, Any]]] = (
    ("pentagon", {}),
    ("rp2", {}),
    ("phantom_pentagon", {"k": 2}),
    ("four_path", {}),
    ("cross_polytope_stellar", {"d": 2}),
    ("cross_polytope_stellar", {"d": 3}),
    ("disjoint_pentagons", {"r": 2}),
    ("conjecture_graph", {"n": 1}),
)


def _subject(name: str, params: Dict[str, Any]) -> str:
    return name + "".join(f"[{k}={v}]" for k, v in sorted(params.items()))


def check_implication_audits(ctx: BatteryContext) -> Outcome:
    # three isolated points: the triangle ideal as a Stanley-Reisner ideal
    subjects = [("triangle", new_complex(3, [[1], [2], [3]]))]
    subjects += [(_subject(name, p), named_complex(name, **p)) for name, p in AUDIT_SUBJECTS]
    audited: Dict[str, List[str]] = {}
    for label, delta in subjects:
        report = paper_audit(delta, fields=ctx.fields, subject=label, **ctx.scan())
        audited[label] = report.violations
    violated = {k: v for k, v in audited.items() if v}
    return not violated, {"audited": sorted(audited), "violations": violated}


def _cm_square_verdicts(delta: SimplicialComplex, ctx: BatteryContext) -> Dict[str, Any]:
    out: Dict[str, Any] = {}
    for fs in ctx.fields:
        try:
            r = is_cm_square(delta, fs, **ctx.scan())
            out[fs.tag] = {"is_cm": r.is_cm, "depth": r.depth, "dim": r.dim, "via": r.via}
        except BudgetExceededError as e:
            out[fs.tag] = {"error": str(e), "required": e.required}
    return out


def check_conjecture_graph(ctx: BatteryContext) -> Outcome:
    delta = named_complex("conjecture_graph", n=1)
    verdicts = _cm_square_verdicts(delta, ctx)
    same = _is_pentagon(delta)
    return same and all(v.get("is_cm") is True for v in verdicts.values()), {"is_pentagon": same, "cm_square": verdicts}


def record_conjecture_graph_n2(ctx: BatteryContext) -> Outcome:
    delta = named_complex("conjecture_graph", n=2)
    return None, {"n": delta.n, "cm_square": _cm_square_verdicts(delta, ctx)}


@dataclass(frozen=True)
class BatteryCheck:
    slug: str
    title: str
    run: Callable[[BatteryContext], Outcome]
    slow: bool = False


CHECKS: Sequence[BatteryCheck] = (
    BatteryCheck("triangle-ideal", "I^(2) = I^2 + (x1x2x3) for the triangle ideal", check_triangle_ideal),
    BatteryCheck("pentagon", "pentagon: no special triangles, CM square, Gorenstein", check_pentagon),
    BatteryCheck("rp2", "six-vertex real projective plane", check_rp2),
    BatteryCheck("phantom-pentagon", "phantom pentagon: CM symbolic square, non-CM square", check_phantom_pentagon),
    BatteryCheck("four-path", "path on four vertices: CM, not Gorenstein, non-CM square", check_four_path),
    BatteryCheck("cross-polytope-stellar", "subdivided cross polytopes have CM squares", check_cross_polytope_stellar),
    BatteryCheck("disjoint-pentagons", "two disjoint pentagons, directly and over join factors", check_disjoint_pentagons),
    BatteryCheck("oracle-equivalences", "criteria against direct computation", check_oracle_equivalences, slow=True),
    BatteryCheck("implication-audits", "no audit implication is violated", check_implication_audits, slow=True),
    BatteryCheck("conjecture-graph", "conjectured family, first member", check_conjecture_graph),
    BatteryCheck("conjecture-graph-n2", "conjectured family, n = 2 (recorded)", record_conjecture_graph_n2),
)


def run_check(check: BatteryCheck, ctx: BatteryContext, timings: bool = False) -> CheckResultDoc:
    logger.info("running %s", check.slug)
    start = time.perf_counter()
    try:
        passed, details = check.run(ctx)
    except BudgetExceededError as e:
        passed, details = False, {"error": str(e), "required": e.required, "budget": e.budget}
    seconds = time.perf_counter() - start
    if passed is False:
        logger.warning("%s failed after %.2fs", check.slug, seconds)
    else:
        logger.info("%s done in %.2fs", check.slug, seconds)
    return CheckResultDoc(
        slug=check.slug,
        title=check.title,
        passed=passed,
        seconds=round(seconds, 3) if timings else None,
        details=details,
    )


def run_battery(
    fields: Optional[Sequence] = None,
    budget: Optional[int] = None,
    seed: int = 0,
    jobs: Optional[int] = None,
    only: Optional[Sequence[str]] = None,
    skip_slow: bool = False,
    oracle_n_max: int = 5,
    oracle_random: int = 200,
    timings: bool = False,
) -> BatteryReport:
    settings = get_settings()
    ctx = BatteryContext(
        fields=parse_fields(fields if fields is not None else settings.fields),
        budget=settings.scan_budget if budget is None else budget,
        seed=seed,
        jobs=settings.jobs if jobs is None else jobs,
        oracle_n_max=oracle_n_max,
        oracle_random=oracle_random,
    )
    results = []
    for check in CHECKS:
        if only and check.slug not in only:
            continue
        if skip_slow and check.slow:
            continue
        results.append(run_check(check, ctx, timings=timings))
    return BatteryReport(field_battery=[f.tag for f in ctx.fields], budget=ctx.budget, seed=seed, results=results)


def battery_markdown(report: BatteryReport) -> str:
    rows = []
    for r in report.results:
        status = "recorded" if r.passed is None else ("pass" if r.passed else "FAIL")
        rows.append(f"| {r.slug} | {r.title} | {status} | {'' if r.seconds is None else r.seconds} |")
    lines = [
        "# reproduce report",
        "",
        f"fields: {', '.join(report.field_battery)}; budget: {report.budget}; seed: {report.seed}",
        "",
        "| check | title | status | seconds |",
        "|---|---|---|---|",
        *rows,
        "",
        f"overall: {'pass' if report.passed else 'FAIL'}",
    ]
    return "\n".join(lines)
