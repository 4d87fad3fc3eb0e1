from functools import cached_property
from typing import Any, Dict, Optional, Sequence, Tuple

import numpy as np

from shared.complexes.simplicial import SimplicialComplex, from_masks, void_complex
from shared.errors import IdealError
from shared.ideals.monomial import MonomialIdeal, rho, symbolic_power
from shared.providers.base import DegreeComplexProvider


class SymbolicDegreeComplex(DegreeComplexProvider):
    """Δ_a(I_Δ^(ℓ)) straight from the facets of Δ.

    Δ_a is generated by F' \\ G_a over the facets F' ⊇ G_a with
    Σ_{i∉F'} a_i <= ℓ - 1; for a >= 0 this is the usual facet-sum description.
    """

    name = "symbolic"

    def __init__(self, delta: SimplicialComplex, ell: int = 2, cfg: Optional[Dict[str, Any]] = None):
        super().__init__(cfg)
        if ell < 1:
            raise IdealError(f"symbolic power needs ℓ >= 1, got {ell}")
        if delta.is_void:
            raise IdealError("the void complex has the unit ideal")
        self._delta = delta
        self.ell = ell
        self._inside = self.facet_matrix()
        self._masks = np.array(delta.facets, dtype=np.uint64)

    @property
    def n(self) -> int:
        return self._delta.n

    def delta(self) -> SimplicialComplex:
        return self._delta

    @cached_property
    def ideal(self) -> MonomialIdeal:
        return symbolic_power(self._delta, self.ell)

    def rho(self) -> Tuple[int, ...]:
        return rho(self.ideal)

    def faces_at(self, a: Sequence[int]) -> SimplicialComplex:
        av = np.asarray(a, dtype=np.int64)
        g = self.negative_support(a)
        outside_sum = (~self._inside * np.clip(av, 0, None)).sum(axis=1)
        good = ((self._masks & np.uint64(g)) == np.uint64(g)) & (outside_sum <= self.ell - 1)
        if not good.any():
            return void_complex(self.n)
        return from_masks(self.n, (int(f) & ~g for f in self._masks[good]))

    def describe(self) -> str:
        return f"symbolic power {self.ell} of {self._delta!r}"
