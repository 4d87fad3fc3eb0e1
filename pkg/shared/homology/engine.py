"""Reduced simplicial homology and the homological tests built on it.

Cohen–Macaulayness is decided by Reisner's criterion and Gorensteinness by
Stanley's criterion applied to the core. Every test returns a :class:`Verdict`
whose certificate is the lexicographically first failing face.
"""

import re
from dataclasses import dataclass, field as dc_field
from functools import lru_cache
from typing import Any, Dict, List, Optional, Tuple, Union

import numpy as np
from sympy import isprime

from shared.complexes.simplicial import (
    SimplicialComplex,
    core,
    f_vector,
    link,
    popcount,
    vertices_of,
)
from shared.errors import ComplexError, FieldError
from shared.homology.linalg import MAX_PRIME, bareiss_rank, rank_mod_p
from shared.log import get_logger

logger = get_logger(__name__)

_PRIME_TAG = re.compile(r"^(?:F|GF|FF|Z/)_?\(?(\d+)\)?(?:Z)?$", re.IGNORECASE)


@dataclass(frozen=True)
class FieldSpec:
    characteristic: int

    @property
    def tag(self) -> str:
        return "Q" if self.characteristic == 0 else f"F{self.characteristic}"

    def __str__(self) -> str:
        return self.tag


RATIONALS = FieldSpec(0)
F2 = FieldSpec(2)

FieldLike = Union[str, FieldSpec]


def parse_field(tag: FieldLike) -> FieldSpec:
    """Accepts Q / QQ / Rationals and F2 / GF(3) / F_5 / Z/7."""
    if isinstance(tag, FieldSpec):
        return tag
    t = str(tag).strip()
    if t.upper() in ("Q", "QQ", "RATIONALS"):
        return RATIONALS
    m = _PRIME_TAG.match(t)
    if not m:
        raise FieldError(f"unrecognised field {tag!r}")
    p = int(m.group(1))
    if not isprime(p):
        raise FieldError(f"{p} is not prime")
    if p > MAX_PRIME:
        raise FieldError(f"prime {p} exceeds the supported {MAX_PRIME}")
    return FieldSpec(p)


def parse_fields(tags) -> List[FieldSpec]:
    if isinstance(tags, str):
        tags = [t for t in tags.split(",") if t.strip()]
    out: List[FieldSpec] = []
    for t in tags:
        f = parse_field(t)
        if f not in out:
            out.append(f)
    if not out:
        raise FieldError("empty field battery")
    return out


@dataclass(frozen=True)
class HomologyProfile:
    field: FieldSpec
    dims: Dict[int, int]

    def betti(self, i: int) -> int:
        return self.dims.get(i, 0)

    @property
    def is_acyclic(self) -> bool:
        return not any(self.dims.values())

    @property
    def alternating_sum(self) -> int:
        return sum((-1) ** i * b for i, b in self.dims.items())

    def to_doc(self) -> Dict[str, Any]:
        return {"field": self.field.tag, "betti": {str(i): b for i, b in sorted(self.dims.items())}}


@dataclass
class Verdict:
    holds: bool
    field: str = ""
    certificate: Optional[Dict[str, Any]] = None
    details: Dict[str, Any] = dc_field(default_factory=dict)

    def __bool__(self) -> bool:
        return self.holds


def _faces_by_dim(facets: Tuple[int, ...]) -> Dict[int, List[int]]:
    faces = set()
    for f in facets:
        sub = f
        while True:
            faces.add(sub)
            if sub == 0:
                break
            sub = (sub - 1) & f
    groups: Dict[int, List[int]] = {}
    for f in faces:
        groups.setdefault(popcount(f) - 1, []).append(f)
    return {d: sorted(fs, key=vertices_of) for d, fs in groups.items()}


def _boundary(groups: Dict[int, List[int]], i: int) -> np.ndarray:
    cols = groups.get(i, [])
    rows = groups.get(i - 1, [])
    mat = np.zeros((len(rows), len(cols)), dtype=np.int64)
    if not rows or not cols:
        return mat
    index = {f: r for r, f in enumerate(rows)}
    for c, f in enumerate(cols):
        for j, v in enumerate(vertices_of(f)):
            mat[index[f & ~(1 << (v - 1))], c] = -1 if j % 2 else 1
    return mat


def boundary_matrix(delta: SimplicialComplex, i: int) -> np.ndarray:
    """∂_i from i-faces to (i-1)-faces; ∂_0 is the augmentation onto the empty face."""
    if i < -1 or i > delta.dim:
        raise ComplexError(f"boundary index {i} outside -1..{delta.dim}")
    return _boundary(_faces_by_dim(delta.facets), i)


def _rank(mat: np.ndarray, characteristic: int) -> int:
    if mat.size == 0:
        return 0
    if characteristic == 0:
        return bareiss_rank(mat.tolist())
    return rank_mod_p(mat, characteristic)


@lru_cache(maxsize=1 << 16)
def betti_table(facets: Tuple[int, ...], characteristic: int) -> Tuple[Tuple[int, int], ...]:
    if not facets:
        return ((-1, 0),)
    groups = _faces_by_dim(facets)
    top = max(groups)
    ranks = {i: _rank(_boundary(groups, i), characteristic) for i in range(0, top + 1)}
    out = []
    for i in range(-1, top + 1):
        b = len(groups.get(i, [])) - ranks.get(i, 0) - ranks.get(i + 1, 0)
        out.append((i, b))
    return tuple(out)


def reduced_homology(delta: SimplicialComplex, field: FieldLike = RATIONALS) -> HomologyProfile:
    fs = parse_field(field)
    return HomologyProfile(field=fs, dims=dict(betti_table(delta.facets, fs.characteristic)))


def homology_cache_info():
    return betti_table.cache_info()


def _ordered_faces(delta: SimplicialComplex) -> List[int]:
    return sorted(delta.faces, key=vertices_of)


def _invert(vmap: Dict[int, int]) -> Dict[int, int]:
    return {new: old for old, new in vmap.items()}


def is_cohen_macaulay(delta: SimplicialComplex, field: FieldLike = RATIONALS) -> Verdict:
    """Reisner: every link has vanishing reduced homology below its dimension."""
    fs = parse_field(field)
    for f in _ordered_faces(delta):
        lk = link(delta, f).complex
        betti = betti_table(lk.facets, fs.characteristic)
        for i, b in betti:
            if i < lk.dim and b:
                return Verdict(False, fs.tag, {"face": list(vertices_of(f)), "degree": i, "betti": b})
    return Verdict(True, fs.tag)


def is_gorenstein(delta: SimplicialComplex, field: FieldLike = RATIONALS) -> Verdict:
    """Stanley: every link of the core is a homology sphere of its own dimension."""
    fs = parse_field(field)
    cored = core(delta)
    gamma = cored.complex
    back = _invert(cored.vertex_map)
    euler = f_vector(gamma).euler
    sanity = euler == (-1) ** gamma.dim if gamma.dim >= 0 else euler == -1
    details = {"core_vertices": sorted(cored.vertex_map), "euler_sanity": sanity}
    if gamma.is_void:
        return Verdict(False, fs.tag, {"reason": "void complex"}, details)
    for f in _ordered_faces(gamma):
        lk = link(gamma, f).complex
        for i, b in betti_table(lk.facets, fs.characteristic):
            want = 1 if i == lk.dim else 0
            if b != want:
                face = [back[v] for v in vertices_of(f)]
                return Verdict(False, fs.tag, {"face": face, "degree": i, "betti": b}, details)
    return Verdict(True, fs.tag, None, details)


def is_locally_gorenstein(delta: SimplicialComplex, field: FieldLike = RATIONALS) -> Verdict:
    fs = parse_field(field)
    for v in vertices_of(delta.used_vertices):
        if not is_gorenstein(link(delta, [v]).complex, fs):
            return Verdict(False, fs.tag, {"vertex": v})
    return Verdict(True, fs.tag)


def euler_characteristic_check(delta: SimplicialComplex, field: FieldLike = RATIONALS) -> Verdict:
    """Σ(-1)^i dim H̃_i must equal the reduced Euler characteristic of the f-vector."""
    h = reduced_homology(delta, field)
    euler = f_vector(delta).euler
    return Verdict(h.alternating_sum == euler, h.field.tag, None, {"homology": h.alternating_sum, "f_vector": euler})
