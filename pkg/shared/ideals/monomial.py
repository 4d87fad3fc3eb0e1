"""Monomial ideals over K[x_1..x_n] with exact, minimal generating sets.

Monomials are exponent tuples; arithmetic on them goes through
``sympy.polys.monomials`` so the conventions match sympy's polynomial rings.
"""

from dataclasses import dataclass
from itertools import combinations_with_replacement
from typing import Iterable, List, Sequence, Tuple, Union

from sympy.polys.monomials import (
    monomial_divides,
    monomial_gcd,
    monomial_lcm,
    monomial_mul,
)

from shared.complexes.simplicial import (
    SimplicialComplex,
    from_masks,
    full_mask,
    mask_of,
    minimal_nonfaces,
    vertices_of,
)
from shared.complexes.graphs import Graph
from shared.errors import IdealError

Monomial = Tuple[int, ...]


def _same_length(*ms: Sequence[int]) -> None:
    if len({len(m) for m in ms}) > 1:
        raise IdealError(f"monomials of different lengths: {[len(m) for m in ms]}")


def multiply(m1: Monomial, m2: Monomial) -> Monomial:
    _same_length(m1, m2)
    return tuple(monomial_mul(m1, m2))


def divides(m1: Monomial, m2: Monomial) -> bool:
    """True when m1 divides m2."""
    _same_length(m1, m2)
    return monomial_divides(m1, m2)


def lcm(m1: Monomial, m2: Monomial) -> Monomial:
    _same_length(m1, m2)
    return tuple(monomial_lcm(m1, m2))


def gcd(m1: Monomial, m2: Monomial) -> Monomial:
    _same_length(m1, m2)
    return tuple(monomial_gcd(m1, m2))


def sqrt(m: Monomial) -> Monomial:
    return tuple(1 if e else 0 for e in m)


def support(m: Monomial) -> int:
    return mask_of(i + 1 for i, e in enumerate(m) if e)


def squarefree(n: int, vertices: Iterable[int]) -> Monomial:
    vs = set(vertices)
    return tuple(1 if i in vs else 0 for i in range(1, n + 1))


def format_monomial(m: Monomial) -> str:
    parts = []
    for i, e in enumerate(m, start=1):
        if e == 1:
            parts.append(f"x{i}")
        elif e > 1:
            parts.append(f"x{i}^{e}")
    return "*".join(parts) or "1"


def _gen_key(m: Monomial):
    return (sum(m), tuple(-e for e in m))


def minimalize(gens: Iterable[Monomial]) -> Tuple[Monomial, ...]:
    """Drop duplicates and every generator divisible by another; graded-lex order."""
    kept: List[Monomial] = []
    for m in sorted(set(gens), key=_gen_key):
        if not any(monomial_divides(k, m) for k in kept):
            kept.append(m)
    return tuple(kept)


@dataclass(frozen=True)
class MonomialIdeal:
    n: int
    gens: Tuple[Monomial, ...]

    @property
    def is_zero(self) -> bool:
        return not self.gens

    @property
    def is_unit(self) -> bool:
        return any(sum(g) == 0 for g in self.gens)

    @property
    def is_squarefree(self) -> bool:
        return all(e <= 1 for g in self.gens for e in g)

    def to_doc(self):
        return {"n": self.n, "gens": [list(g) for g in self.gens]}

    def __str__(self) -> str:
        return "(" + ", ".join(format_monomial(g) for g in self.gens) + ")"


def new_ideal(n: int, gens: Iterable[Sequence[int]]) -> MonomialIdeal:
    if n < 1:
        raise IdealError(f"ambient ring needs n >= 1, got {n}")
    checked = []
    for g in gens:
        g = tuple(g)
        if len(g) != n:
            raise IdealError(f"exponent vector {list(g)} has length {len(g)}, expected {n}")
        if any((not isinstance(e, int)) or e < 0 for e in g):
            raise IdealError(f"exponent vector {list(g)} must be nonnegative integers")
        checked.append(g)
    return MonomialIdeal(n=n, gens=minimalize(checked))


def unit_ideal(n: int) -> MonomialIdeal:
    return MonomialIdeal(n=n, gens=((0,) * n,))


def _same_ring(i: MonomialIdeal, j: MonomialIdeal) -> None:
    if i.n != j.n:
        raise IdealError(f"ideals live in different rings (n={i.n} vs n={j.n})")


def add(i: MonomialIdeal, j: MonomialIdeal) -> MonomialIdeal:
    _same_ring(i, j)
    return MonomialIdeal(n=i.n, gens=minimalize(i.gens + j.gens))


def product(i: MonomialIdeal, j: MonomialIdeal) -> MonomialIdeal:
    _same_ring(i, j)
    return MonomialIdeal(n=i.n, gens=minimalize(tuple(monomial_mul(g, h)) for g in i.gens for h in j.gens))


def power(ideal: MonomialIdeal, k: int) -> MonomialIdeal:
    """k-th power; k = 0 gives the unit ideal."""
    if k < 0:
        raise IdealError(f"power exponent must be >= 0, got {k}")
    out = unit_ideal(ideal.n)
    for _ in range(k):
        out = product(out, ideal)
    return out


def intersect(i: MonomialIdeal, j: MonomialIdeal) -> MonomialIdeal:
    _same_ring(i, j)
    return MonomialIdeal(n=i.n, gens=minimalize(tuple(monomial_lcm(g, h)) for g in i.gens for h in j.gens))


def contains(ideal: MonomialIdeal, m: Monomial) -> bool:
    if len(m) != ideal.n:
        raise IdealError(f"monomial of length {len(m)} tested against n={ideal.n}")
    return any(monomial_divides(g, m) for g in ideal.gens)


def is_subset(i: MonomialIdeal, j: MonomialIdeal) -> bool:
    return all(contains(j, g) for g in i.gens)


def equals(i: MonomialIdeal, j: MonomialIdeal) -> bool:
    return i.n == j.n and i.gens == j.gens


def radical(ideal: MonomialIdeal) -> MonomialIdeal:
    return MonomialIdeal(n=ideal.n, gens=minimalize(sqrt(g) for g in ideal.gens))


def rho(ideal: MonomialIdeal) -> Tuple[int, ...]:
    """Largest exponent of each variable over the minimal generators."""
    out = [0] * ideal.n
    for g in ideal.gens:
        for i, e in enumerate(g):
            if e > out[i]:
                out[i] = e
    return tuple(out)


def stanley_reisner(delta: SimplicialComplex) -> MonomialIdeal:
    gens = [tuple(1 if nf >> i & 1 else 0 for i in range(delta.n)) for nf in minimal_nonfaces(delta)]
    return MonomialIdeal(n=delta.n, gens=minimalize(gens))


def edge_ideal(g: Graph) -> MonomialIdeal:
    return MonomialIdeal(n=g.n, gens=minimalize(squarefree(g.n, e) for e in g.edges))


def minimal_vertex_covers(edges: Iterable[int]) -> Tuple[int, ...]:
    """Minimal transversals of a hypergraph given by edge masks (Berge's incremental method)."""
    covers = {0}
    for e in sorted(set(edges)):
        if e == 0:
            return ()
        grown = set()
        for t in covers:
            if t & e:
                grown.add(t)
            else:
                grown.update(t | (1 << (v - 1)) for v in vertices_of(e))
        ordered = sorted(grown, key=lambda m: (bin(m).count("1"), m))
        covers = set()
        for t in ordered:
            if not any(c & t == c for c in covers):
                covers.add(t)
    return tuple(sorted(covers))


def complex_of_ideal(ideal: MonomialIdeal) -> SimplicialComplex:
    """Δ(I) with I_Δ(I) = √I; facets are complements of minimal vertex covers."""
    if ideal.is_unit:
        raise IdealError("the unit ideal has no associated complex")
    rad = radical(ideal)
    covers = minimal_vertex_covers(support(g) for g in rad.gens)
    full = full_mask(ideal.n)
    return from_masks(ideal.n, [full & ~c for c in covers])


def facet_prime_power(n: int, facet: int, ell: int) -> MonomialIdeal:
    """P_F^ℓ with P_F generated by the variables outside F."""
    outside = [i for i in range(n) if not facet >> i & 1]
    gens = []
    for combo in combinations_with_replacement(outside, ell):
        m = [0] * n
        for i in combo:
            m[i] += 1
        gens.append(tuple(m))
    return MonomialIdeal(n=n, gens=minimalize(gens))


def _as_complex(source: Union[SimplicialComplex, MonomialIdeal]) -> SimplicialComplex:
    if isinstance(source, SimplicialComplex):
        return source
    if not source.is_squarefree:
        raise IdealError("symbolic powers here are taken of squarefree ideals")
    return complex_of_ideal(source)


def symbolic_power(source: Union[SimplicialComplex, MonomialIdeal], ell: int) -> MonomialIdeal:
    """I^(ℓ) as the intersection of P_F^ℓ over the facets F of Δ."""
    if ell < 1:
        raise IdealError(f"symbolic power needs ℓ >= 1, got {ell}")
    delta = _as_complex(source)
    out = unit_ideal(delta.n)
    for f in delta.facets:
        out = intersect(out, facet_prime_power(delta.n, f, ell))
        if out.is_zero:
            break
    return out


def symbolic_contains(source: Union[SimplicialComplex, MonomialIdeal], m: Monomial, ell: int) -> bool:
    """m ∈ I^(ℓ) iff every facet F has Σ_{i∉F} m_i >= ℓ."""
    if ell < 1:
        raise IdealError(f"symbolic power needs ℓ >= 1, got {ell}")
    delta = _as_complex(source)
    if len(m) != delta.n:
        raise IdealError(f"monomial of length {len(m)} tested against n={delta.n}")
    for f in delta.facets:
        if sum(e for i, e in enumerate(m) if not f >> i & 1) < ell:
            return False
    return True
