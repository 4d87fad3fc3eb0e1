from typing import Dict, List, Optional

from pydantic import BaseModel, Field, validator

from shared.complexes.simplicial import MAX_VERTICES, SimplicialComplex, new_complex
from shared.ideals.monomial import MonomialIdeal, new_ideal


class ComplexDoc(BaseModel):
    n: int = Field(ge=1, le=MAX_VERTICES)
    facets: List[List[int]]
    name: Optional[str] = None

    @validator("facets")
    def _in_range(cls, v, values):
        n = values.get("n")
        for face in v:
            for x in face:
                if n is not None and not 1 <= x <= n:
                    raise ValueError(f"vertex {x} outside [1, {n}]")
        return v

    def to_complex(self, allow_ghost_vertices: bool = False) -> SimplicialComplex:
        return new_complex(self.n, self.facets, allow_ghost_vertices=allow_ghost_vertices)

    @classmethod
    def from_complex(cls, delta: SimplicialComplex, name: Optional[str] = None) -> "ComplexDoc":
        return cls(n=delta.n, facets=[list(f) for f in delta.facet_sets()], name=name)


class IdealDoc(BaseModel):
    n: int = Field(ge=1, le=MAX_VERTICES)
    gens: List[List[int]]

    @validator("gens")
    def _shape(cls, v, values):
        n = values.get("n")
        for g in v:
            if n is not None and len(g) != n:
                raise ValueError(f"exponent vector {g} has length {len(g)}, expected {n}")
            if any(e < 0 for e in g):
                raise ValueError(f"exponent vector {g} has a negative entry")
        return v

    def to_ideal(self) -> MonomialIdeal:
        return new_ideal(self.n, self.gens)

    @classmethod
    def from_ideal(cls, ideal: MonomialIdeal) -> "IdealDoc":
        return cls(n=ideal.n, gens=[list(g) for g in ideal.gens])


class HomologyDoc(BaseModel):
    field: str
    betti: Dict[str, int]
