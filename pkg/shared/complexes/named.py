"""Named complexes and graphs used throughout the reproduce battery.

Labels are fixed so that reports line up with the worked examples:
cross polytopes put x_i at i and y_i at d + i, the subdivision apex is 2d + 1,
and the phantom pentagon numbers v_1..v_k first, then w, x, y, z.
"""

from itertools import product
from typing import Any, Callable, Dict, List, Tuple

from shared.complexes.simplicial import (
    SimplicialComplex,
    from_masks,
    mask_of,
    new_complex,
    simplex as _simplex,
    stellar_subdivision,
)
from shared.complexes.graphs import Graph, complementary_complex, disjoint_union, new_graph
from shared.errors import ComplexError

RP2_FACETS: List[Tuple[int, int, int]] = [
    (1, 2, 4), (1, 2, 6), (1, 3, 4), (1, 3, 5), (1, 5, 6),
    (2, 3, 5), (2, 3, 6), (2, 4, 5), (3, 4, 6), (4, 5, 6),
]


def _need(cond: bool, msg: str) -> None:
    if not cond:
        raise ComplexError(msg)


def graph_complex(g: Graph) -> SimplicialComplex:
    """The graph itself as a 1-dimensional complex."""
    return new_complex(g.n, [list(e) for e in g.edges], allow_ghost_vertices=True)


def cycle_graph(n: int) -> Graph:
    _need(n >= 3, f"cycle needs n >= 3, got {n}")
    return new_graph(n, [(i, i % n + 1) for i in range(1, n + 1)])


def path_graph(n: int) -> Graph:
    _need(n >= 2, f"path needs n >= 2, got {n}")
    return new_graph(n, [(i, i + 1) for i in range(1, n)])


def phantom_pentagon_graph(k: int = 2) -> Graph:
    _need(k >= 1, f"phantom pentagon needs k >= 1, got {k}")
    w, x, y, z = k + 1, k + 2, k + 3, k + 4
    edges = [(v, w) for v in range(1, k + 1)] + [(v, z) for v in range(1, k + 1)]
    edges += [(w, x), (x, y), (y, z)]
    return new_graph(k + 4, edges)


def conjecture_graph(n: int = 1) -> Graph:
    """Graph on 3n + 2 vertices whose edge ideal is conjectured to have a CM square."""
    _need(n >= 1, f"conjecture graph needs n >= 1, got {n}")
    edges = [(1, 2)]
    for k in range(1, n + 1):
        edges += [
            (3 * k - 1, 3 * k),
            (3 * k, 3 * k + 1),
            (3 * k + 1, 3 * k + 2),
            (3 * k + 2, 3 * k - 2),
        ]
    for ell in range(2, n + 1):
        edges.append((3 * ell - 3, 3 * ell))
    return new_graph(3 * n + 2, edges)


def disjoint_pentagons(r: int = 2) -> Graph:
    _need(r >= 1, f"need at least one pentagon, got r={r}")
    g = cycle_graph(5)
    for _ in range(r - 1):
        g = disjoint_union(g, cycle_graph(5))
    return g


def cycle(n: int = 5) -> SimplicialComplex:
    return graph_complex(cycle_graph(n))


def pentagon() -> SimplicialComplex:
    return cycle(5)


def path(n: int = 4) -> SimplicialComplex:
    return graph_complex(path_graph(n))


def four_path() -> SimplicialComplex:
    # I = (x1x3, x1x4, x2x4)
    return path(4)


def simplex(n: int = 3) -> SimplicialComplex:
    _need(n >= 1, f"simplex needs n >= 1, got {n}")
    return _simplex(n)


def cross_polytope(d: int = 2) -> SimplicialComplex:
    _need(d >= 1, f"cross polytope needs d >= 1, got {d}")
    facets = []
    for choice in product((0, 1), repeat=d):
        facets.append(mask_of(i + 1 if c else d + i + 1 for i, c in enumerate(choice)))
    return from_masks(2 * d, facets)


def cross_polytope_stellar(d: int = 2) -> SimplicialComplex:
    _need(d >= 2, f"subdividing the facet x_1..x_d needs d >= 2, got {d}")
    return stellar_subdivision(cross_polytope(d), list(range(1, d + 1)))


def rp2() -> SimplicialComplex:
    return new_complex(6, RP2_FACETS)


def phantom_pentagon(k: int = 2) -> SimplicialComplex:
    return graph_complex(phantom_pentagon_graph(k))


def complementary(n: int, edges: List[List[int]]) -> SimplicialComplex:
    return complementary_complex(new_graph(n, edges))


GRAPHS: Dict[str, Callable[..., Graph]] = {
    "cycle": cycle_graph,
    "path": path_graph,
    "phantom_pentagon": phantom_pentagon_graph,
    "conjecture_graph": conjecture_graph,
    "disjoint_pentagons": disjoint_pentagons,
}

COMPLEXES: Dict[str, Callable[..., SimplicialComplex]] = {
    "cycle": cycle,
    "pentagon": pentagon,
    "path": path,
    "four_path": four_path,
    "simplex": simplex,
    "cross_polytope": cross_polytope,
    "cross_polytope_stellar": cross_polytope_stellar,
    "rp2": rp2,
    "phantom_pentagon": phantom_pentagon,
    "conjecture_graph": lambda n=1: complementary_complex(conjecture_graph(n)),
    "disjoint_pentagons": lambda r=2: complementary_complex(disjoint_pentagons(r)),
    "complementary": complementary,
}

ALIASES = {
    "cross": "cross_polytope",
    "cross_stellar": "cross_polytope_stellar",
    "rp2_triangulation": "rp2",
    "conjecture": "conjecture_graph",
}


def _canonical(name: str) -> str:
    key = name.strip().lower().replace("-", "_")
    return ALIASES.get(key, key)


def named_complex(name: str, **params: Any) -> SimplicialComplex:
    key = _canonical(name)
    if key not in COMPLEXES:
        raise ComplexError(f"unknown complex {name!r}; known: {', '.join(sorted(COMPLEXES))}")
    try:
        return COMPLEXES[key](**params)
    except TypeError as e:
        raise ComplexError(f"bad parameters for {key}: {e}") from e


def named_graph(name: str, **params: Any) -> Graph:
    key = _canonical(name)
    if key not in GRAPHS:
        raise ComplexError(f"unknown graph {name!r}; known: {', '.join(sorted(GRAPHS))}")
    try:
        return GRAPHS[key](**params)
    except TypeError as e:
        raise ComplexError(f"bad parameters for {key}: {e}") from e
