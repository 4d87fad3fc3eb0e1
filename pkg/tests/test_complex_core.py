import math

import networkx as nx
import pytest

from shared.complexes import (
    cone,
    core,
    empty_face_complex,
    f_vector,
    join,
    join_factors,
    link,
    minimal_nonfaces,
    named_complex,
    named_graph,
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
from shared.complexes.graphs import complementary_complex, disjoint_union, graph_diameter, one_skeleton
from shared.complexes.named import cycle_graph, phantom_pentagon_graph
from shared.errors import ComplexError
from shared.ideals import edge_ideal, stanley_reisner


def test_facets_are_maximal_and_sorted():
    delta = new_complex(3, [[2, 3], [1], [1, 2], [2]])
    assert delta.facet_sets() == [(1, 2), (2, 3)]
    assert delta.dim == 1
    assert delta.is_pure


def test_ghost_vertices_need_the_flag():
    with pytest.raises(ComplexError):
        new_complex(4, [[1, 2], [2, 3]])
    delta = new_complex(4, [[1, 2], [2, 3]], allow_ghost_vertices=True)
    assert delta.n == 4


def test_vertex_out_of_range():
    with pytest.raises(ComplexError):
        new_complex(3, [[1, 4]])
    with pytest.raises(ValueError):
        new_complex(65, [[1]])


def test_void_and_empty_face():
    void = void_complex(3)
    assert void.is_void and void.dim == -1
    assert f_vector(void).euler == 0
    e = empty_face_complex()
    assert e.dim == -1 and not e.is_void
    assert f_vector(e).euler == -1


def test_link_and_star_relabel(pentagon):
    lk = link(pentagon, [1])
    assert lk.vertex_map == {2: 1, 5: 2}
    assert lk.complex.facet_sets() == [(1,), (2,)]
    st = star(pentagon, [1])
    assert st.vertex_map == {1: 1, 2: 2, 5: 3}
    assert st.complex.facet_sets() == [(1, 2), (1, 3)]
    with pytest.raises(ComplexError):
        link(pentagon, [1, 3])


def test_link_of_empty_face_is_the_complex(rp2):
    assert link(rp2, []).complex == rp2


def test_skeleton_and_restrict():
    tri = simplex(3)
    assert skeleton(tri, 1).facet_sets() == [(1, 2), (1, 3), (2, 3)]
    with pytest.raises(ComplexError):
        skeleton(tri, 3)
    r = restrict(tri, [1, 3])
    assert r.vertex_map == {1: 1, 3: 2}
    assert r.complex.facet_sets() == [(1, 2)]


def test_rp2_f_vector(rp2):
    fv = f_vector(rp2)
    assert fv.f == (6, 15, 10)
    assert fv.euler == 0


def test_core_strips_cone_points(pentagon):
    coned = cone(pentagon)
    assert coned.n == 6
    cored = core(coned)
    assert cored.complex == pentagon
    assert 6 not in cored.vertex_map


def test_join_and_factors(pentagon):
    j = join(pentagon, pentagon)
    assert j.n == 10
    assert len(j.facets) == 25
    factors = join_factors(j)
    assert len(factors) == 2
    assert all(f.complex == pentagon for f in factors)
    assert sorted(factors[1].vertex_map) == [6, 7, 8, 9, 10]


def test_join_factors_put_the_cone_simplex_last(pentagon):
    factors = join_factors(cone(pentagon))
    assert len(factors) == 2
    assert factors[-1].vertex_map == {6: 1}
    assert factors[-1].complex.facet_sets() == [(1,)]


def test_stellar_subdivision_of_the_square():
    square = named_complex("cross_polytope", d=2)
    assert square.facet_sets() == [(1, 2), (1, 4), (2, 3), (3, 4)]
    sub = stellar_subdivision(square, [1, 2])
    assert sub.n == 5
    assert sub.facet_sets() == [(1, 4), (1, 5), (2, 3), (2, 5), (3, 4)]
    with pytest.raises(ComplexError):
        stellar_subdivision(square, [1])


def test_relabel_needs_a_bijection(pentagon):
    with pytest.raises(ComplexError):
        relabel(pentagon, {1: 1, 2: 1, 3: 3, 4: 4, 5: 5})
    rotated = relabel(pentagon, {1: 2, 2: 3, 3: 4, 4: 5, 5: 1})
    assert rotated == pentagon


def test_minimal_nonfaces_of_pentagon(pentagon):
    nfs = minimal_nonfaces(pentagon)
    assert len(nfs) == 5
    assert all(bin(m).count("1") == 2 for m in nfs)


def test_ghost_vertex_is_a_minimal_nonface():
    delta = new_complex(3, [[1, 2]], allow_ghost_vertices=True)
    assert minimal_nonfaces(delta) == (0b100,)


def test_named_complexes():
    assert len(named_complex("cross_polytope", d=3).facets) == 8
    assert named_complex("cross-stellar", d=3).n == 7
    assert len(named_complex("rp2_triangulation").facets) == 10
    phantom = named_complex("phantom_pentagon", k=2)
    assert phantom.n == 6
    assert phantom.facet_sets() == [(1, 3), (1, 6), (2, 3), (2, 6), (3, 4), (4, 5), (5, 6)]
    assert named_complex("disjoint_pentagons").n == 10
    assert named_complex("conjecture_graph", n=2).n == 8
    with pytest.raises(ComplexError):
        named_complex("klein_bottle")
    with pytest.raises(ComplexError):
        named_complex("cycle", n=2)


def test_diameters(pentagon, four_path):
    assert graph_diameter(one_skeleton(pentagon)) == 2
    assert graph_diameter(one_skeleton(four_path)) == 3
    two_points = new_complex(2, [[1], [2]])
    assert graph_diameter(one_skeleton(two_points)) == math.inf


def test_complementary_complex_uses_independent_sets():
    delta = complementary_complex(cycle_graph(5))
    assert delta.facet_sets() == [(1, 3), (1, 4), (2, 4), (2, 5), (3, 5)]
    assert len(phantom_pentagon_graph(3).edges) == 9


def test_face_queries(pentagon):
    assert pentagon.is_face([1, 2])
    assert not pentagon.is_face([1, 3])
    assert pentagon.is_face([])
    assert pentagon.faces_of_dim(0) == [(1,), (2,), (3,), (4,), (5,)]
    assert len(pentagon.faces_of_dim(1)) == 5
    assert pentagon.faces_of_dim(2) == []


def test_redundant_faces_collapse_into_facets():
    delta = new_complex(4, [[1, 2], [1, 2, 3]], allow_ghost_vertices=True)
    assert delta.facet_sets() == [(1, 2, 3)]


def test_named_graphs():
    c5 = named_graph("cycle", n=5)
    assert len(c5.edges) == 5
    assert named_graph("conjecture") == named_graph("conjecture_graph", n=1)
    with pytest.raises(ComplexError):
        named_graph("petersen")


def test_disjoint_union_shifts_the_second_graph():
    both = disjoint_union(cycle_graph(5), cycle_graph(5))
    assert both.n == 10
    assert len(both.edges) == 10
    assert (6, 7) in both.edges and (6, 10) in both.edges
    assert math.isinf(graph_diameter(both))


GENERATORS = [
    named_complex("pentagon"),
    named_complex("four_path"),
    named_complex("rp2"),
    named_complex("cross_polytope", d=2),
    named_complex("cross_polytope_stellar", d=3),
    named_complex("phantom_pentagon"),
    simplex(3),
    new_complex(3, [[1], [2], [3]]),
]


def test_link_of_star_is_the_link(random_complexes):
    for delta in random_complexes + GENERATORS:
        for face in delta.faces:
            st = star(delta, face)
            inner = [st.vertex_map[v] for v in vertices_of(face)]
            assert link(st.complex, inner).complex == link(delta, face).complex


def test_stellar_subdivision_keeps_euler_characteristic(random_complexes):
    for delta in random_complexes + GENERATORS:
        euler = f_vector(delta).euler
        for face in delta.faces:
            if len(vertices_of(face)) >= 2:
                assert f_vector(stellar_subdivision(delta, face)).euler == euler


def test_join_multiplies_euler_characteristics():
    pieces = GENERATORS + [empty_face_complex()]
    for gamma in pieces:
        for lam in pieces:
            expected = -f_vector(gamma).euler * f_vector(lam).euler
            assert f_vector(join(gamma, lam)).euler == expected


def test_complementary_complex_round_trip(random_graphs):
    for g in random_graphs:
        delta = complementary_complex(g)
        assert delta.used_vertices == (1 << g.n) - 1
        assert stanley_reisner(delta) == edge_ideal(g)
        complement = {(u, v) for u in range(1, g.n + 1) for v in range(u + 1, g.n + 1)} - set(g.edges)
        assert one_skeleton(delta).edges == frozenset(complement)


def test_graph_diameter_matches_floyd_warshall(random_graphs):
    for g in random_graphs:
        dist = nx.floyd_warshall_numpy(g.to_networkx(), nodelist=range(1, g.n + 1))
        assert graph_diameter(g) == dist.max()
