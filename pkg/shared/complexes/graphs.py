import math
from dataclasses import dataclass
from typing import FrozenSet, Iterable, Tuple, Union

import networkx as nx

from shared.complexes.simplicial import SimplicialComplex, from_masks, mask_of, vertices_of
from shared.errors import ComplexError

Edge = Tuple[int, int]


@dataclass(frozen=True)
class Graph:
    n: int
    edges: FrozenSet[Edge]

    def to_networkx(self) -> nx.Graph:
        g = nx.Graph()
        g.add_nodes_from(range(1, self.n + 1))
        g.add_edges_from(self.edges)
        return g


def new_graph(n: int, edges: Iterable[Iterable[int]]) -> Graph:
    if n < 1:
        raise ComplexError(f"graph needs at least one vertex, got n={n}")
    out = set()
    for e in edges:
        try:
            u, v = sorted(e)
        except (TypeError, ValueError) as err:
            raise ComplexError(f"edge {e!r} must be a pair of vertices") from err
        if u == v:
            raise ComplexError(f"loop at vertex {u}")
        if u < 1 or v > n:
            raise ComplexError(f"edge {(u, v)} outside [1, {n}]")
        out.add((u, v))
    return Graph(n=n, edges=frozenset(out))


def graph_diameter(g: Graph) -> Union[int, float]:
    """Largest shortest-path distance; ``math.inf`` when disconnected."""
    nxg = g.to_networkx()
    if g.n <= 1:
        return 0
    if not nx.is_connected(nxg):
        return math.inf
    return nx.diameter(nxg)


def one_skeleton(delta: SimplicialComplex) -> Graph:
    edges = set()
    for f in delta.faces_by_dim.get(1, ()):
        edges.add(vertices_of(f))
    return Graph(n=delta.n, edges=frozenset(edges))


def disjoint_union(g1: Graph, g2: Graph) -> Graph:
    shift = g1.n
    edges = set(g1.edges) | {(u + shift, v + shift) for u, v in g2.edges}
    return Graph(n=g1.n + g2.n, edges=frozenset(edges))


def complementary_complex(g: Graph) -> SimplicialComplex:
    """Δ(G): the faces are the independent sets of G, so I_Δ(G) = I(G)."""
    comp = nx.complement(g.to_networkx())
    return from_masks(g.n, [mask_of(c) for c in nx.find_cliques(comp)])
