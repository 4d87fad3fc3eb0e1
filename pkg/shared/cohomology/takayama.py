"""Graded local cohomology of S/I through Takayama's degree complexes.

dim_K H^i_m(S/I)_a = dim_K H̃_{i-|G_a|-1}(Δ_a(I); K) when G_a is a face of
Δ(I) and a_j <= ρ_j - 1 for every j, and 0 otherwise. Depth is the least i
with a nonzero piece; the scan visits a_j = -1 on a face G of Δ(I) and
a_j ∈ {0, ..., ρ_j - 1} off G.
"""

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field as dc_field
from itertools import product
from typing import Any, Dict, Iterator, List, Optional, Sequence, Tuple, Union

from shared.complexes.simplicial import SimplicialComplex, join_factors, popcount, vertices_of
from shared.config import get_settings
from shared.errors import BudgetExceededError, IdealError
from shared.homology.engine import RATIONALS, FieldLike, betti_table, parse_field
from shared.ideals.monomial import MonomialIdeal, power, stanley_reisner
from shared.log import get_logger
from shared.providers import DegreeComplexProvider, get_provider

logger = get_logger(__name__)

Source = Union[MonomialIdeal, DegreeComplexProvider]


@dataclass(frozen=True)
class DegreeVector:
    a: Tuple[int, ...]

    @property
    def negative_support(self) -> int:
        g = 0
        for i, x in enumerate(self.a):
            if x < 0:
                g |= 1 << i
        return g


@dataclass
class DepthReport:
    depth: int
    dim: int
    is_cm: bool
    field: str
    witness: Optional[Dict[str, Any]] = None
    search_space: int = 0
    via: str = "takayama"
    factors: List[Dict[str, Any]] = dc_field(default_factory=list)

    def to_doc(self) -> Dict[str, Any]:
        return {
            "depth": self.depth,
            "dim": self.dim,
            "is_cm": self.is_cm,
            "field": self.field,
            "witness": self.witness,
            "search_space": self.search_space,
            "via": self.via,
            "factors": self.factors,
        }


def _provider(source: Source) -> DegreeComplexProvider:
    if isinstance(source, DegreeComplexProvider):
        return source
    return get_provider("generators", source)


def delta_a(ideal: MonomialIdeal, a: Sequence[int]) -> SimplicialComplex:
    if len(a) != ideal.n:
        raise IdealError(f"degree vector of length {len(a)} for n={ideal.n}")
    return get_provider("generators", ideal).faces_at(a)


def delta_a_symbolic(delta: SimplicialComplex, a: Sequence[int], ell: int) -> SimplicialComplex:
    if any(x < 0 for x in a):
        raise IdealError("the facet-sum description needs a >= 0; use delta_a for negative entries")
    if len(a) != delta.n:
        raise IdealError(f"degree vector of length {len(a)} for n={delta.n}")
    return get_provider("symbolic", delta, ell).faces_at(a)


def quotient_dim(provider: DegreeComplexProvider) -> int:
    """Krull dimension of S/I: the largest facet size of Δ(I)."""
    d = provider.delta()
    return max((popcount(f) for f in d.facets), default=0)


def local_cohomology_dim(source: Source, i: int, a: Sequence[int], field: FieldLike = RATIONALS) -> int:
    prov = _provider(source)
    dim = quotient_dim(prov)
    if i < 0 or i > dim:
        raise IdealError(f"cohomological degree {i} outside 0..{dim}")
    if len(a) != prov.n:
        raise IdealError(f"degree vector of length {len(a)} for n={prov.n}")
    fs = parse_field(field)
    g = DegreeVector(tuple(a)).negative_support
    if not prov.delta().has_face(g):
        return 0
    if any(x > r - 1 for x, r in zip(a, prov.rho())):
        return 0
    j = i - popcount(g) - 1
    return dict(betti_table(prov.faces_at(a).facets, fs.characteristic)).get(j, 0)


def _negative_faces(prov: DegreeComplexProvider) -> List[int]:
    return sorted(prov.delta().faces, key=lambda f: (popcount(f), vertices_of(f)))


def search_space_size(source: Source) -> int:
    prov = _provider(source)
    rho = prov.rho()
    total = 0
    for g in _negative_faces(prov):
        count = 1
        for j in range(prov.n):
            if not g >> j & 1:
                count *= rho[j]
        total += count
    return total


def search_space(source: Source) -> Iterator[Tuple[int, ...]]:
    prov = _provider(source)
    for g in _negative_faces(prov):
        yield from _vectors_for(prov.n, prov.rho(), g)


def _vectors_for(n: int, rho: Sequence[int], g: int) -> Iterator[Tuple[int, ...]]:
    ranges = [(-1,) if g >> j & 1 else range(rho[j]) for j in range(n)]
    for a in product(*ranges):
        yield tuple(a)


Best = Optional[Tuple[int, Tuple[int, ...], int, int]]


def _scan(prov: DegreeComplexProvider, faces: Sequence[int], characteristic: int, dim: int) -> Best:
    """Least (i, a) with a nonzero piece, over the negative supports in ``faces``."""
    rho = prov.rho()
    best: Best = None
    for g in faces:
        size = popcount(g)
        # pieces with this support start at i = |G|
        if best is not None and best[0] < size:
            continue
        for a in _vectors_for(prov.n, rho, g):
            betti = betti_table(prov.faces_at(a).facets, characteristic)
            for j, b in betti:
                if not b:
                    continue
                i = j + size + 1
                if i > dim:
                    continue
                cand = (i, a, j, b)
                if best is None or cand[:2] < best[:2]:
                    best = cand
                break
        if best is not None and best[0] == 0:
            break
    return best


def _scan_chunk(args) -> Best:
    prov, faces, characteristic, dim = args
    return _scan(prov, faces, characteristic, dim)


def depth_via_takayama(
    source: Source,
    field: FieldLike = RATIONALS,
    budget: Optional[int] = None,
    jobs: Optional[int] = None,
) -> DepthReport:
    prov = _provider(source)
    fs = parse_field(field)
    settings = get_settings()
    budget = settings.scan_budget if budget is None else budget
    jobs = settings.jobs if jobs is None else jobs
    size = search_space_size(prov)
    if size > budget:
        logger.warning("refusing %s scan of %d degree vectors (budget %d)", prov.name, size, budget)
        raise BudgetExceededError(size, budget, what=f"{prov.name} depth scan")
    dim = quotient_dim(prov)
    faces = _negative_faces(prov)
    logger.debug("scan of %s: %d degree vectors, %d negative supports, field %s", prov.describe(), size, len(faces), fs.tag)
    if jobs > 1 and len(faces) > 1:
        chunks = [faces[k::jobs] for k in range(jobs)]
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_scan_chunk, [(prov, c, fs.characteristic, dim) for c in chunks if c]))
        found = [r for r in results if r is not None]
        best = min(found, key=lambda r: r[:2]) if found else None
    else:
        best = _scan(prov, faces, fs.characteristic, dim)
    depth = dim if best is None else min(best[0], dim)
    witness = None
    if best is not None:
        witness = {"i": best[0], "a": list(best[1]), "homology_index": best[2], "dim": best[3]}
    return DepthReport(depth=depth, dim=dim, is_cm=depth == dim, field=fs.tag, witness=witness, search_space=size)


def _trivial_report(delta: SimplicialComplex, fs) -> DepthReport:
    # I_Δ = 0: S is a polynomial ring
    return DepthReport(depth=delta.n, dim=delta.n, is_cm=True, field=fs.tag, via="polynomial-ring")


def is_cm_power(
    delta: SimplicialComplex,
    k: int,
    field: FieldLike = RATIONALS,
    budget: Optional[int] = None,
    jobs: Optional[int] = None,
) -> DepthReport:
    """Cohen–Macaulayness of S/I_Δ^k."""
    if k < 1:
        raise IdealError(f"power must be >= 1, got {k}")
    fs = parse_field(field)
    ideal = stanley_reisner(delta)
    if ideal.is_zero:
        return _trivial_report(delta, fs)
    return depth_via_takayama(power(ideal, k), fs, budget=budget, jobs=jobs)


def join_square_depth(factors: Sequence[Tuple[int, int, bool]]) -> int:
    """depth S/I² for I = I_1 + ... + I_r with the I_k in disjoint variables.

    Each factor is ``(depth S_k/I_k, depth S_k/I_k², I_k == 0)``. For nonzero
    monomial ideals I and J,
    depth S/(I+J)² = min(d(I) + d(J) + 1, d(I²) + d(J), d(I) + d(J²)).
    A zero ideal only adds its variables.
    """
    if not factors:
        raise IdealError("no join factors")
    d1, d2, zero = factors[0]
    for e1, e2, other_zero in factors[1:]:
        if zero or other_zero:
            d1, d2 = d1 + e1, d2 + e2
        else:
            d1, d2 = d1 + e1, min(d1 + e1 + 1, d2 + e1, d1 + e2)
        zero = zero and other_zero
    return d2


def is_cm_square(
    delta: SimplicialComplex,
    field: FieldLike = RATIONALS,
    budget: Optional[int] = None,
    jobs: Optional[int] = None,
    join_fallback: bool = True,
) -> DepthReport:
    """Cohen–Macaulayness of S/I_Δ².

    When the scan is over budget and Δ splits as a join, the verdict is the
    conjunction of the factor verdicts.
    """
    fs = parse_field(field)
    try:
        return is_cm_power(delta, 2, fs, budget=budget, jobs=jobs)
    except BudgetExceededError:
        if not join_fallback:
            raise
        factors = join_factors(delta)
        if len(factors) < 2:
            raise
        logger.info("square scan over budget; deciding over %d join factors", len(factors))
        squares = [is_cm_square(f.complex, fs, budget=budget, jobs=jobs, join_fallback=False) for f in factors]
        radicals = [is_cm_radical(f.complex, fs, budget=budget, jobs=jobs) for f in factors]
        depth = join_square_depth(
            [(r.depth, s.depth, s.via == "polynomial-ring") for r, s in zip(radicals, squares)]
        )
        dim = max((popcount(f) for f in delta.facets), default=0)
        return DepthReport(
            depth=depth,
            dim=dim,
            is_cm=depth == dim,
            field=fs.tag,
            via="join-factors",
            factors=[
                {"vertices": sorted(f.vertex_map), "radical_depth": r.depth, "report": s.to_doc()}
                for f, r, s in zip(factors, radicals, squares)
            ],
        )


def is_cm_symbolic_square(
    delta: SimplicialComplex,
    field: FieldLike = RATIONALS,
    budget: Optional[int] = None,
    jobs: Optional[int] = None,
) -> DepthReport:
    fs = parse_field(field)
    if stanley_reisner(delta).is_zero:
        return _trivial_report(delta, fs)
    return depth_via_takayama(get_provider("symbolic", delta, 2), fs, budget=budget, jobs=jobs)


def is_cm_radical(
    delta: SimplicialComplex,
    field: FieldLike = RATIONALS,
    budget: Optional[int] = None,
    jobs: Optional[int] = None,
) -> DepthReport:
    """S/I_Δ through the same scan; agrees with Reisner's criterion."""
    fs = parse_field(field)
    ideal = stanley_reisner(delta)
    if ideal.is_zero:
        return _trivial_report(delta, fs)
    return depth_via_takayama(ideal, fs, budget=budget, jobs=jobs)
