from dataclasses import dataclass
from itertools import combinations
from typing import List, Optional, Tuple

from shared.complexes.simplicial import vertices_of
from shared.errors import IdealError
from shared.ideals.monomial import Monomial, MonomialIdeal, contains, power, support
from shared.log import get_logger

logger = get_logger(__name__)


@dataclass(frozen=True)
class Hypergraph:
    n: int
    edges: Tuple[int, ...]


@dataclass(frozen=True)
class SpecialTriangle:
    vertices: Tuple[int, int, int]
    # generator supports meeting the triangle in {j,k}, {i,k} and {i,j}
    witnesses: Tuple[int, int, int]

    def witness_sets(self) -> List[Tuple[int, ...]]:
        return [vertices_of(h) for h in self.witnesses]


@dataclass(frozen=True)
class Sym2Verdict:
    equal: bool
    checked: int
    triangle: Optional[SpecialTriangle] = None
    monomial: Optional[Monomial] = None


def _require_squarefree(ideal: MonomialIdeal) -> None:
    if not ideal.is_squarefree:
        raise IdealError("a squarefree ideal is required")


def hypergraph(ideal: MonomialIdeal) -> Hypergraph:
    _require_squarefree(ideal)
    return Hypergraph(n=ideal.n, edges=tuple(support(g) for g in ideal.gens))


def special_triangles(ideal: MonomialIdeal) -> List[SpecialTriangle]:
    """Every vertex triple with three generators each meeting it in exactly two vertices."""
    edges = hypergraph(ideal).edges
    out: List[SpecialTriangle] = []
    for i, j, k in combinations(range(1, ideal.n + 1), 3):
        bi, bj, bk = 1 << (i - 1), 1 << (j - 1), 1 << (k - 1)
        tri = bi | bj | bk
        by_trace = {bj | bk: [], bi | bk: [], bi | bj: []}
        for h in edges:
            trace = h & tri
            if trace in by_trace:
                by_trace[trace].append(h)
        for ha in by_trace[bj | bk]:
            for hb in by_trace[bi | bk]:
                for hc in by_trace[bi | bj]:
                    out.append(SpecialTriangle(vertices=(i, j, k), witnesses=(ha, hb, hc)))
    return out


def triangle_monomial(n: int, t: SpecialTriangle) -> Monomial:
    """x^{H1∩H2∩H3} · x^{H1∪H2∪H3}."""
    ha, hb, hc = t.witnesses
    inter, union = ha & hb & hc, ha | hb | hc
    return tuple((inter >> i & 1) + (union >> i & 1) for i in range(n))


def symbolic2_equals_square(ideal: MonomialIdeal, first_failure_only: bool = True) -> Sym2Verdict:
    """Decide I^(2) = I^2 through the special triangles of the generator hypergraph."""
    triangles = special_triangles(ideal)
    if not triangles:
        return Sym2Verdict(equal=True, checked=0)
    square = power(ideal, 2)
    checked = 0
    failure: Optional[Tuple[SpecialTriangle, Monomial]] = None
    for t in triangles:
        checked += 1
        m = triangle_monomial(ideal.n, t)
        if not contains(square, m):
            if failure is None:
                failure = (t, m)
            if first_failure_only:
                break
    logger.debug("special triangles: %d found, %d checked", len(triangles), checked)
    if failure is None:
        return Sym2Verdict(equal=True, checked=checked)
    return Sym2Verdict(equal=False, checked=checked, triangle=failure[0], monomial=failure[1])
