from .simplicial import (
    FVector,
    Relabeled,
    SimplicialComplex,
    cone,
    core,
    empty_face_complex,
    f_vector,
    join,
    join_factors,
    link,
    mask_of,
    minimal_nonfaces,
    new_complex,
    relabel,
    restrict,
    simplex,
    skeleton,
    star,
    stellar_subdivision,
    vertices_of,
    void_complex,
)
from .graphs import Graph, disjoint_union, graph_diameter, new_graph, one_skeleton
from .named import named_complex, named_graph
