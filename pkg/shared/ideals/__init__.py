from .monomial import (
    Monomial,
    MonomialIdeal,
    add,
    complex_of_ideal,
    contains,
    divides,
    edge_ideal,
    equals,
    format_monomial,
    gcd,
    intersect,
    lcm,
    minimal_vertex_covers,
    minimalize,
    multiply,
    new_ideal,
    power,
    radical,
    rho,
    sqrt,
    squarefree,
    stanley_reisner,
    symbolic_contains,
    symbolic_power,
)
from .triangles import Hypergraph, SpecialTriangle, Sym2Verdict, hypergraph, special_triangles, symbolic2_equals_square
