from itertools import combinations

import networkx as nx
import numpy as np
import pytest

from shared.complexes import disjoint_union, join, named_complex, new_complex, new_graph
from shared.complexes.named import cycle_graph
from shared.errors import IdealError
from shared.ideals import (
    complex_of_ideal,
    contains,
    divides,
    edge_ideal,
    equals,
    gcd,
    intersect,
    lcm,
    minimal_vertex_covers,
    multiply,
    new_ideal,
    power,
    radical,
    rho,
    sqrt,
    squarefree,
    stanley_reisner,
    symbolic2_equals_square,
    symbolic_contains,
    symbolic_power,
)
from shared.ideals.monomial import add, format_monomial, is_subset, minimalize, unit_ideal
from shared.ideals.triangles import hypergraph, special_triangles, triangle_monomial

TRIANGLE = [(1, 1, 0), (0, 1, 1), (1, 0, 1)]


def test_triangle_ideal_symbolic_square_is_bit_exact():
    ideal = new_ideal(3, TRIANGLE)
    sym = symbolic_power(ideal, 2)
    assert sym.gens == ((1, 1, 1), (2, 2, 0), (2, 0, 2), (0, 2, 2))
    assert equals(sym, add(power(ideal, 2), new_ideal(3, [(1, 1, 1)])))
    assert not equals(sym, power(ideal, 2))


def test_generators_are_minimal_in_graded_lex_order():
    assert minimalize([(1, 1), (2, 1), (0, 2), (1, 1)]) == ((1, 1), (0, 2))
    ideal = new_ideal(2, [(2, 1), (1, 1)])
    assert ideal.gens == ((1, 1),)


def test_new_ideal_validates():
    with pytest.raises(IdealError):
        new_ideal(3, [(1, 1)])
    with pytest.raises(ValueError):
        new_ideal(2, [(1, -1)])


def test_powers():
    ideal = new_ideal(3, TRIANGLE)
    assert power(ideal, 0) == unit_ideal(3)
    assert power(ideal, 1) == ideal
    assert len(power(ideal, 2).gens) == 6
    with pytest.raises(IdealError):
        power(ideal, -1)


def test_intersect_and_membership():
    x1 = new_ideal(2, [(1, 0)])
    x2 = new_ideal(2, [(0, 1)])
    assert intersect(x1, x2).gens == ((1, 1),)
    assert contains(x1, (3, 0))
    assert not contains(x1, (0, 4))
    assert is_subset(intersect(x1, x2), x1)


def test_radical_and_rho():
    ideal = new_ideal(2, [(2, 1), (0, 3)])
    assert radical(ideal).gens == ((0, 1),)
    assert rho(ideal) == (2, 3)
    assert format_monomial((2, 1)) == "x1^2*x2"


def test_stanley_reisner_of_pentagon(pentagon):
    ideal = stanley_reisner(pentagon)
    supports = sorted(tuple(i + 1 for i, e in enumerate(g) if e) for g in ideal.gens)
    assert supports == [(1, 3), (1, 4), (2, 4), (2, 5), (3, 5)]
    assert ideal.is_squarefree


def test_four_path_ideal(four_path):
    assert set(stanley_reisner(four_path).gens) == {(1, 0, 1, 0), (1, 0, 0, 1), (0, 1, 0, 1)}


def test_complex_of_ideal_inverts_stanley_reisner(rp2):
    assert complex_of_ideal(stanley_reisner(rp2)) == rp2
    with pytest.raises(IdealError):
        complex_of_ideal(unit_ideal(3))


def test_minimal_vertex_covers_of_triangle():
    assert minimal_vertex_covers([0b011, 0b110, 0b101]) == (0b011, 0b101, 0b110)


def test_symbolic_membership(rp2):
    top = (1,) * 6
    ideal = stanley_reisner(rp2)
    assert symbolic_contains(rp2, top, 2)
    assert not contains(power(ideal, 2), top)
    sym = symbolic_power(rp2, 2)
    assert all(symbolic_contains(rp2, g, 2) for g in sym.gens)
    assert contains(sym, top)


def test_symbolic_power_of_complex_and_ideal_agree(pentagon):
    assert symbolic_power(pentagon, 2) == symbolic_power(stanley_reisner(pentagon), 2)
    with pytest.raises(IdealError):
        symbolic_power(new_ideal(2, [(2, 0)]), 2)


def test_special_triangles():
    tris = special_triangles(new_ideal(3, TRIANGLE))
    assert [t.vertices for t in tris] == [(1, 2, 3)]
    assert triangle_monomial(3, tris[0]) == (1, 1, 1)


def test_pentagon_has_no_special_triangles(pentagon):
    ideal = stanley_reisner(pentagon)
    assert special_triangles(ideal) == []
    assert symbolic2_equals_square(ideal).equal
    assert equals(power(ideal, 2), symbolic_power(pentagon, 2))


def test_rp2_square_differs_from_symbolic_square(rp2):
    ideal = stanley_reisner(rp2)
    verdict = symbolic2_equals_square(ideal)
    assert not verdict.equal
    assert verdict.triangle is not None
    assert not contains(power(ideal, 2), verdict.monomial)
    assert symbolic_contains(rp2, verdict.monomial, 2)


def test_disjoint_pentagons_square_is_symbolic():
    delta = named_complex("disjoint_pentagons")
    ideal = stanley_reisner(delta)
    assert symbolic2_equals_square(ideal).equal
    assert equals(power(ideal, 2), symbolic_power(delta, 2))


def test_monomial_arithmetic():
    assert multiply((1, 0, 2), (0, 1, 1)) == (1, 1, 3)
    assert gcd((2, 1, 0), (1, 0, 1)) == (1, 0, 0)
    assert lcm((1, 1), (0, 2)) == (1, 2)
    assert sqrt((2, 3)) == (1, 1)
    assert divides((1, 1), (1, 2))
    assert not divides((0, 3), (1, 2))
    with pytest.raises(IdealError):
        multiply((1,), (1, 1))


def test_edge_ideals():
    c5 = edge_ideal(cycle_graph(5))
    assert len(c5.gens) == 5 and c5.is_squarefree
    two = edge_ideal(disjoint_union(cycle_graph(5), cycle_graph(5)))
    assert two.n == 10 and len(two.gens) == 10
    k3 = edge_ideal(cycle_graph(3))
    assert not equals(symbolic_power(k3, 2), power(k3, 2))


def test_complex_of_a_matching_ideal():
    # (x1*x3, x2*x4)
    delta = complex_of_ideal(new_ideal(4, [(1, 0, 1, 0), (0, 1, 0, 1)]))
    assert delta.facet_sets() == [(1, 2), (1, 4), (2, 3), (3, 4)]


@pytest.mark.parametrize("name", ["pentagon", "four_path", "rp2", "cross_polytope_stellar", "phantom_pentagon", "simplex"])
def test_stanley_reisner_round_trip(name):
    delta = named_complex(name)
    assert complex_of_ideal(stanley_reisner(delta)) == delta


@pytest.mark.parametrize("name", ["pentagon", "rp2", "conjecture_graph"])
def test_ordinary_power_sits_inside_symbolic_power(name):
    delta = named_complex(name)
    assert is_subset(power(stanley_reisner(delta), 2), symbolic_power(delta, 2))


def test_hypergraph_of_generators():
    h = hypergraph(new_ideal(3, TRIANGLE))
    assert h.n == 3
    assert sorted(h.edges) == [0b011, 0b101, 0b110]
    with pytest.raises(IdealError):
        hypergraph(new_ideal(2, [(2, 0)]))


def _has_triangle(g) -> bool:
    return any(nx.triangles(g.to_networkx()).values())


@pytest.mark.parametrize("n", [3, 4, 5])
def test_edge_ideal_square_is_symbolic_iff_triangle_free(n):
    pairs = list(combinations(range(1, n + 1), 2))
    for bits in range(1, 1 << len(pairs)):
        g = new_graph(n, [p for k, p in enumerate(pairs) if bits >> k & 1])
        ideal = edge_ideal(g)
        equal = symbolic2_equals_square(ideal).equal
        assert equal == (not _has_triangle(g))
        assert equal == equals(symbolic_power(ideal, 2), power(ideal, 2))


def test_edge_ideal_criterion_on_larger_random_graphs(random_graphs):
    seen = 0
    for g in random_graphs:
        if g.n < 6 or not g.edges:
            continue
        ideal = edge_ideal(g)
        equal = equals(symbolic_power(ideal, 2), power(ideal, 2))
        assert equal == (not _has_triangle(g))
        assert symbolic2_equals_square(ideal).equal == equal
        seen += 1
    assert seen > 0


JOIN_PIECES = {
    "pentagon": named_complex("pentagon"),
    "four_path": named_complex("four_path"),
    "three_points": new_complex(3, [[1], [2], [3]]),
    "rp2": named_complex("rp2"),
}


def _square_is_symbolic(delta) -> bool:
    return equals(power(stanley_reisner(delta), 2), symbolic_power(delta, 2))


@pytest.mark.parametrize(
    "left, right",
    [
        ("pentagon", "four_path"),
        ("pentagon", "three_points"),
        ("four_path", "three_points"),
        ("three_points", "three_points"),
        ("rp2", "three_points"),
    ],
)
def test_square_is_symbolic_on_a_join_iff_on_both_factors(left, right):
    gamma, lam = JOIN_PIECES[left], JOIN_PIECES[right]
    both = join(gamma, lam)
    expected = _square_is_symbolic(gamma) and _square_is_symbolic(lam)
    assert _square_is_symbolic(both) == expected
    assert symbolic2_equals_square(stanley_reisner(both)).equal == expected


def test_membership_predicate_matches_generators():
    rng = np.random.default_rng(5)
    for _ in range(20):
        n = int(rng.integers(3, 8))
        supports = [
            rng.choice(np.arange(1, n + 1), size=int(rng.integers(1, 4)), replace=False).tolist()
            for _ in range(int(rng.integers(1, 6)))
        ]
        ideal = new_ideal(n, [squarefree(n, s) for s in supports])
        for ell in (1, 2, 3):
            sym = symbolic_power(ideal, ell)
            for g in sym.gens:
                assert not any(h != g and divides(h, g) for h in sym.gens)
            for _ in range(25):
                m = tuple(int(e) for e in rng.integers(0, ell + 1, size=n))
                assert symbolic_contains(ideal, m, ell) == contains(sym, m)
