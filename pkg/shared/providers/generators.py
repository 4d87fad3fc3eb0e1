from functools import cached_property
from typing import Any, Dict, Optional, Sequence, Tuple

import numpy as np

from shared.complexes.simplicial import SimplicialComplex, from_masks, void_complex
from shared.errors import IdealError
from shared.ideals.monomial import MonomialIdeal, complex_of_ideal, rho
from shared.providers.base import DegreeComplexProvider


class GeneratorDegreeComplex(DegreeComplexProvider):
    """Δ_a(I) read off the minimal generators of an arbitrary monomial ideal.

    F lies in Δ_a(I) when F is a face of Δ(I) missing G_a and, for every
    generator x^b, some i outside F ∪ G_a has b_i > a_i.
    """

    name = "generators"

    def __init__(self, ideal: MonomialIdeal, cfg: Optional[Dict[str, Any]] = None):
        super().__init__(cfg)
        if ideal.is_unit:
            raise IdealError("S/I is the zero ring for the unit ideal")
        self.ideal = ideal
        self._gens = np.array(ideal.gens, dtype=np.int64).reshape(len(ideal.gens), ideal.n)

    @property
    def n(self) -> int:
        return self.ideal.n

    @cached_property
    def _delta(self) -> SimplicialComplex:
        return complex_of_ideal(self.ideal)

    @cached_property
    def _faces(self) -> np.ndarray:
        return np.array(sorted(self._delta.faces), dtype=np.uint64)

    def delta(self) -> SimplicialComplex:
        return self._delta

    def rho(self) -> Tuple[int, ...]:
        return rho(self.ideal)

    def faces_at(self, a: Sequence[int]) -> SimplicialComplex:
        av = np.asarray(a, dtype=np.int64)
        neg = av < 0
        g = np.uint64(self.negative_support(a))
        faces = self._faces[(self._faces & g) == 0]
        if self._gens.shape[0]:
            # T_b: coordinates outside G_a where x^b still exceeds a
            hits = (self._gens > av) & ~neg
            t = (hits.astype(np.uint64) * self.bit_weights()).sum(axis=1, dtype=np.uint64)
            if not t.all():
                return void_complex(self.n)
            keep = ((t[None, :] & ~faces[:, None]) != 0).all(axis=1)
            faces = faces[keep]
        if faces.size == 0:
            return void_complex(self.n)
        return from_masks(self.n, (int(f) for f in faces))

    def describe(self) -> str:
        return f"generators of {self.ideal}"
