from abc import ABC, abstractmethod
from typing import Any, Dict, Optional, Sequence, Tuple

import numpy as np

from shared.complexes.simplicial import SimplicialComplex, vertices_of


class DegreeComplexProvider(ABC):
    """Supplies Δ(I), the exponent bounds ρ and the degree complexes Δ_a(I) of one monomial ideal."""

    name = "base"

    def __init__(self, cfg: Optional[Dict[str, Any]] = None):
        self.cfg = cfg or {}

    @property
    @abstractmethod
    def n(self) -> int:
        ...

    @abstractmethod
    def delta(self) -> SimplicialComplex:
        ...

    @abstractmethod
    def rho(self) -> Tuple[int, ...]:
        ...

    @abstractmethod
    def faces_at(self, a: Sequence[int]) -> SimplicialComplex:
        ...

    def describe(self) -> str:
        return self.name

    def bit_weights(self) -> np.ndarray:
        return np.left_shift(np.uint64(1), np.arange(self.n, dtype=np.uint64))

    def negative_support(self, a: Sequence[int]) -> int:
        g = 0
        for i, x in enumerate(a):
            if x < 0:
                g |= 1 << i
        return g

    def facet_matrix(self) -> np.ndarray:
        """Boolean incidence (facets x vertices) of Δ(I)."""
        d = self.delta()
        mat = np.zeros((len(d.facets), self.n), dtype=bool)
        for r, f in enumerate(d.facets):
            for v in vertices_of(f):
                mat[r, v - 1] = True
        return mat
