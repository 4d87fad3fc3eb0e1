"""Combinatorial criteria: 1-skeleton diameters, linkwise diameters and condition (3)."""

import math
from typing import Dict, Optional, Tuple, Union

import numpy as np

from shared.complexes.simplicial import SimplicialComplex, link, submasks, vertices_of
from shared.complexes.graphs import graph_diameter, one_skeleton
from shared.config import CONDITION3_MAX_N, get_settings
from shared.errors import BruteForceBoundError, ComplexError
from shared.homology.engine import Verdict
from shared.log import get_logger

logger = get_logger(__name__)

# triple enumeration works on blocks of this many third members
_BLOCK = 64


def diameter_value(d: Union[int, float]) -> Union[int, str]:
    return "inf" if d == math.inf else int(d)


def depth2_criterion(delta: SimplicialComplex) -> Verdict:
    """depth S/I^(2) >= 2 exactly when the 1-skeleton has diameter at most 2."""
    if delta.dim < 1:
        raise ComplexError("the diameter criterion needs dim Δ >= 1")
    d = graph_diameter(one_skeleton(delta))
    return Verdict(d <= 2, details={"diameter": diameter_value(d)})


def _link_diameters(delta: SimplicialComplex) -> Verdict:
    for f in sorted(delta.faces, key=vertices_of):
        lk = link(delta, f).complex
        if lk.dim < 1:
            continue
        d = graph_diameter(one_skeleton(lk))
        if d > 2:
            return Verdict(False, certificate={"face": list(vertices_of(f)), "diameter": diameter_value(d)})
    return Verdict(True)


def link_diameter_condition(delta: SimplicialComplex) -> Verdict:
    """Every link of dimension >= 1 (the complex itself included) has 1-skeleton diameter <= 2."""
    return _link_diameters(delta)


def s2_criterion(delta: SimplicialComplex) -> Verdict:
    """Serre's (S2) for S/I^(2) of a pure complex."""
    if not delta.is_pure:
        raise ComplexError("the linkwise diameter test for (S2) needs a pure complex")
    return _link_diameters(delta)


def _split_exists(u: int, c: int, nonface: np.ndarray) -> bool:
    """Some A ⊆ U \\ C makes both C ∪ A and C ∪ (U \\ C \\ A) non-faces."""
    d = u & ~c
    for a in submasks(d):
        if nonface[c | a] and nonface[c | (d & ~a)]:
            return True
    return False


def _union_intersection_classes(nf: np.ndarray, n: int) -> Dict[int, Tuple[int, int, int]]:
    """Distinct (F1∪F2∪F3, F1∩F2∩F3) keys, each with one representative triple."""
    i, j = np.triu_indices(len(nf))
    pair_keys = ((nf[i] | nf[j]) << n) | (nf[i] & nf[j])
    uniq, first = np.unique(pair_keys, return_index=True)
    pu, pc = uniq >> n, uniq & ((1 << n) - 1)
    classes: Dict[int, Tuple[int, int, int]] = {}
    for start in range(0, len(nf), _BLOCK):
        block = nf[start:start + _BLOCK]
        keys = ((pu[:, None] | block[None, :]) << n) | (pc[:, None] & block[None, :])
        flat, pos = np.unique(keys.ravel(), return_index=True)
        for key, p in zip(flat.tolist(), pos.tolist()):
            if key in classes:
                continue
            row, col = divmod(p, len(block))
            k = first[row]
            classes[key] = (int(nf[i[k]]), int(nf[j[k]]), int(block[col]))
    return classes


def condition3_check(delta: SimplicialComplex, bound: Optional[int] = None) -> Verdict:
    """For all non-faces F1, F2, F3 there are non-faces G1, G2 with
    G1 ∪ G2 ⊆ F1 ∪ F2 ∪ F3 and G1 ∩ G2 ⊆ F1 ∩ F2 ∩ F3.
    """
    bound = get_settings().condition3_max_n if bound is None else min(bound, CONDITION3_MAX_N)
    n = delta.n
    if n > bound:
        raise BruteForceBoundError(n, bound)
    faces = delta.faces
    nonface = np.ones(1 << n, dtype=bool)
    nonface[list(faces)] = False
    nf = np.flatnonzero(nonface).astype(np.int64)
    if nf.size == 0:
        return Verdict(True, details={"nonfaces": 0, "classes": 0})
    classes = _union_intersection_classes(nf, n)
    logger.debug("condition (3): %d non-faces, %d union/intersection classes", nf.size, len(classes))
    mask = (1 << n) - 1
    for key in sorted(classes):
        u, c = key >> n, key & mask
        if not _split_exists(u, c, nonface):
            triple = [list(vertices_of(f)) for f in classes[key]]
            return Verdict(False, certificate={"triple": triple}, details={"nonfaces": int(nf.size), "classes": len(classes)})
    return Verdict(True, details={"nonfaces": int(nf.size), "classes": len(classes)})
