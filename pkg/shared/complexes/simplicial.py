"""Simplicial complexes on [n] stored as facet bitmasks.

Vertex ``i`` (1-based) is bit ``i - 1``. A complex is immutable once built;
every operation returns a new value. Operations that shrink the vertex set
(link, star, restrict, core) re-index the survivors ascending and hand back the
old -> new vertex map in a :class:`Relabeled` pair.
"""

from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from typing import Dict, FrozenSet, Iterable, Iterator, List, NamedTuple, Tuple, Union

import networkx as nx

from shared.errors import ComplexError

MAX_VERTICES = 64

FaceLike = Union[int, Iterable[int]]


def popcount(mask: int) -> int:
    return bin(mask).count("1")


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << (v - 1)
    return m


def vertices_of(mask: int) -> Tuple[int, ...]:
    out = []
    i = 1
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return tuple(out)


def submasks(mask: int) -> Iterator[int]:
    """All submasks of ``mask``, the mask itself first and 0 last."""
    sub = mask
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & mask


def maximal_masks(masks: Iterable[int]) -> Tuple[int, ...]:
    """Inclusion-maximal members, sorted ascending as bit patterns."""
    uniq = sorted(set(masks), key=lambda m: (-popcount(m), m))
    kept: List[int] = []
    for m in uniq:
        if not any(m & k == m for k in kept):
            kept.append(m)
    return tuple(sorted(kept))


def full_mask(n: int) -> int:
    return (1 << n) - 1


@dataclass(frozen=True)
class SimplicialComplex:
    n: int
    facets: Tuple[int, ...]

    @cached_property
    def faces(self) -> FrozenSet[int]:
        out = set()
        for f in self.facets:
            if f in out:
                continue
            out.update(submasks(f))
        return frozenset(out)

    @cached_property
    def faces_by_dim(self) -> Dict[int, Tuple[int, ...]]:
        """Faces grouped by dimension, each group ordered lexicographically by vertex tuple."""
        groups: Dict[int, List[int]] = {}
        for f in self.faces:
            groups.setdefault(popcount(f) - 1, []).append(f)
        return {d: tuple(sorted(fs, key=vertices_of)) for d, fs in sorted(groups.items())}

    @property
    def is_void(self) -> bool:
        return not self.facets

    @property
    def dim(self) -> int:
        if not self.facets:
            return -1
        return max(popcount(f) for f in self.facets) - 1

    @property
    def is_pure(self) -> bool:
        return len({popcount(f) for f in self.facets}) <= 1

    @property
    def used_vertices(self) -> int:
        m = 0
        for f in self.facets:
            m |= f
        return m

    def has_face(self, mask: int) -> bool:
        return any(mask & f == mask for f in self.facets)

    def is_face(self, face: FaceLike) -> bool:
        return self.has_face(_as_mask(self.n, face))

    def faces_of_dim(self, i: int) -> List[Tuple[int, ...]]:
        return [vertices_of(f) for f in self.faces_by_dim.get(i, ())]

    def facet_sets(self) -> List[Tuple[int, ...]]:
        return sorted(vertices_of(f) for f in self.facets)

    def __repr__(self) -> str:
        return f"SimplicialComplex(n={self.n}, facets={self.facet_sets()})"


class Relabeled(NamedTuple):
    complex: SimplicialComplex
    vertex_map: Dict[int, int]


@dataclass(frozen=True)
class FVector:
    f: Tuple[int, ...]
    euler: int


def _as_mask(n: int, face: FaceLike) -> int:
    if isinstance(face, int):
        if face < 0 or face >> n:
            raise ComplexError(f"face mask {face:#x} outside [{n}]")
        return face
    verts = list(face)
    for v in verts:
        if not isinstance(v, int) or v < 1 or v > n:
            raise ComplexError(f"vertex {v!r} outside [1, {n}]")
    return mask_of(verts)


def from_masks(n: int, masks: Iterable[int]) -> SimplicialComplex:
    """Unchecked constructor used by the operations below."""
    return SimplicialComplex(n=n, facets=maximal_masks(masks))


def new_complex(
    n: int,
    faces: Iterable[Iterable[int]],
    allow_ghost_vertices: bool = False,
) -> SimplicialComplex:
    if not isinstance(n, int) or n < 1:
        raise ComplexError(f"vertex count must be a positive integer, got {n!r}")
    if n > MAX_VERTICES:
        raise ComplexError(f"n={n} exceeds the supported {MAX_VERTICES} vertices")
    masks = [_as_mask(n, face) for face in faces]
    delta = from_masks(n, masks)
    if not allow_ghost_vertices and delta.used_vertices != full_mask(n):
        unused = vertices_of(full_mask(n) & ~delta.used_vertices)
        raise ComplexError(f"vertices {list(unused)} lie in no face")
    return delta


def simplex(n: int) -> SimplicialComplex:
    return from_masks(n, [full_mask(n)])


def empty_face_complex(n: int = 0) -> SimplicialComplex:
    """The complex {∅}; n > 0 leaves every vertex as a ghost."""
    return SimplicialComplex(n=n, facets=(0,))


def void_complex(n: int) -> SimplicialComplex:
    return SimplicialComplex(n=n, facets=())


def _reindex(masks: Iterable[int], keep: int) -> Relabeled:
    old = vertices_of(keep)
    vmap = {v: i + 1 for i, v in enumerate(old)}
    out = []
    for m in masks:
        nm = 0
        for v in vertices_of(m & keep):
            nm |= 1 << (vmap[v] - 1)
        out.append(nm)
    return Relabeled(from_masks(len(old), out), vmap)


def _require_face(delta: SimplicialComplex, face: FaceLike) -> int:
    m = _as_mask(delta.n, face)
    if not delta.has_face(m):
        raise ComplexError(f"{list(vertices_of(m))} is not a face")
    return m


def link(delta: SimplicialComplex, face: FaceLike) -> Relabeled:
    f = _require_face(delta, face)
    parts = [g & ~f for g in delta.facets if g & f == f]
    keep = 0
    for p in parts:
        keep |= p
    return _reindex(parts, keep)


def star(delta: SimplicialComplex, face: FaceLike) -> Relabeled:
    f = _require_face(delta, face)
    parts = [g for g in delta.facets if g & f == f]
    keep = 0
    for p in parts:
        keep |= p
    return _reindex(parts, keep)


def skeleton(delta: SimplicialComplex, k: int) -> SimplicialComplex:
    if k < 0 or k > delta.dim:
        raise ComplexError(f"skeleton index {k} outside 0..{delta.dim}")
    out: List[int] = []
    for f in delta.facets:
        if popcount(f) <= k + 1:
            out.append(f)
        else:
            out.extend(mask_of(c) for c in combinations(vertices_of(f), k + 1))
    return from_masks(delta.n, out)


def restrict(delta: SimplicialComplex, vertices: FaceLike) -> Relabeled:
    w = _as_mask(delta.n, vertices) & delta.used_vertices
    return _reindex([f & w for f in delta.facets], w)


def cone_vertices(delta: SimplicialComplex) -> int:
    """Vertices lying in every facet (star{x} = Δ)."""
    if not delta.facets:
        return 0
    m = delta.facets[0]
    for f in delta.facets[1:]:
        m &= f
    return m


def core(delta: SimplicialComplex) -> Relabeled:
    if delta.is_void:
        return Relabeled(delta, {})
    return restrict(delta, delta.used_vertices & ~cone_vertices(delta))


def join(gamma: SimplicialComplex, lam: SimplicialComplex) -> SimplicialComplex:
    """Simplicial join; vertex v of ``lam`` becomes ``v + gamma.n``."""
    if gamma.n + lam.n > MAX_VERTICES:
        raise ComplexError("join exceeds the supported vertex count")
    shift = gamma.n
    return from_masks(gamma.n + lam.n, [f | (g << shift) for f in gamma.facets for g in lam.facets])


def cone(delta: SimplicialComplex) -> SimplicialComplex:
    return join(delta, simplex(1))


def stellar_subdivision(delta: SimplicialComplex, face: FaceLike) -> SimplicialComplex:
    """Subdivide on ``face``; the new apex is vertex n + 1."""
    f = _require_face(delta, face)
    if popcount(f) < 2:
        raise ComplexError("stellar subdivision needs a face of dimension >= 1")
    if delta.n + 1 > MAX_VERTICES:
        raise ComplexError("subdivision exceeds the supported vertex count")
    v = 1 << delta.n
    out: List[int] = []
    for g in delta.facets:
        if g & f != f:
            out.append(g)
            continue
        for w in vertices_of(f):
            out.append((g & ~(1 << (w - 1))) | v)
    return from_masks(delta.n + 1, out)


def relabel(delta: SimplicialComplex, mapping: Dict[int, int]) -> SimplicialComplex:
    if sorted(mapping) != list(range(1, delta.n + 1)) or sorted(mapping.values()) != list(range(1, delta.n + 1)):
        raise ComplexError("relabeling must be a bijection of [n]")
    return from_masks(delta.n, [mask_of(mapping[v] for v in vertices_of(f)) for f in delta.facets])


def f_vector(delta: SimplicialComplex) -> FVector:
    f = tuple(len(delta.faces_by_dim.get(i, ())) for i in range(delta.dim + 1))
    euler = -1 + sum((-1) ** i * c for i, c in enumerate(f))
    if delta.is_void:
        euler = 0
    return FVector(f=f, euler=euler)


def minimal_nonfaces(delta: SimplicialComplex) -> Tuple[int, ...]:
    faces = delta.faces
    out = set()
    for f in faces:
        for i in range(delta.n):
            bit = 1 << i
            if f & bit:
                continue
            cand = f | bit
            if cand in faces or cand in out:
                continue
            if all((cand & ~(1 << (u - 1))) in faces for u in vertices_of(cand)):
                out.add(cand)
    return tuple(sorted(out))


def join_factors(delta: SimplicialComplex) -> List[Relabeled]:
    """Split Δ into join factors: components of the minimal non-face hypergraph.

    Vertices outside every minimal non-face form one simplex factor, listed last.
    """
    g = nx.Graph()
    touched = 0
    for nf in minimal_nonfaces(delta):
        vs = vertices_of(nf)
        touched |= nf
        g.add_nodes_from(vs)
        nx.add_path(g, vs)
    groups = [mask_of(c) for c in nx.connected_components(g)]
    factors = [restrict(delta, m) for m in sorted(groups, key=vertices_of)]
    rest = delta.used_vertices & ~touched
    if rest:
        factors.append(restrict(delta, rest))
    return factors
