import random

import pytest
from hypothesis import given

from cliqueminor.cliques import clique_census, clique_number, count_cliques_naive
from cliqueminor.enumeration import enumerate_labeled_graphs
from cliqueminor.errors import InputError, PreconditionError
from cliqueminor.graph import (
    Graph,
    ShapeParams,
    complement,
    complement_of_matching,
    complete_graph,
    contract_edge,
    cycle_graph,
    delete_vertex,
    disjoint_union,
    empty_graph,
    from_edge_list,
    induced_subgraph,
    path_graph,
    relabel,
    star_graph,
)

from conftest import graphs, random_graph


def test_from_edge_list_basic_cases():
    assert from_edge_list(0, []).n == 0
    assert from_edge_list(3, [(0, 1), (1, 2), (0, 2)]) == complete_graph(3)
    c4 = from_edge_list(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
    assert complement(c4) == from_edge_list(4, [(0, 2), (1, 3)])


def test_from_edge_list_collapses_duplicates():
    g = from_edge_list(3, [(0, 1), (1, 0), (0, 1)])
    assert g.edges() == [(0, 1)]


@pytest.mark.parametrize("edges", [[(0, 3)], [(1, 1)], [(-1, 0)]])
def test_from_edge_list_rejects_bad_pairs(edges):
    with pytest.raises(InputError):
        from_edge_list(3, edges)


def test_graph_validation_rejects_asymmetric_rows():
    with pytest.raises(InputError):
        Graph(2, (0b10, 0))
    with pytest.raises(InputError):
        Graph(2, (0b01, 0b01))


def test_complement_examples():
    assert complement(complete_graph(3)) == empty_graph(3)
    assert complement(cycle_graph(4)).edge_count == 2
    assert complement(complement_of_matching(ShapeParams(2, 0))) == from_edge_list(4, [(0, 1), (2, 3)])


def test_complement_is_involution_exhaustive():
    for n in range(7):
        for g in enumerate_labeled_graphs(n):
            assert complement(complement(g)) == g


def test_complement_is_involution_random(rng):
    for n in (7, 8):
        for _ in range(50):
            g = random_graph(rng, n)
            assert complement(complement(g)) == g


def test_contract_examples():
    assert contract_edge(cycle_graph(4), 0, 1) == complete_graph(3)
    assert contract_edge(complete_graph(5), 2, 4) == complete_graph(4)
    assert contract_edge(path_graph(3), 0, 1) == complete_graph(2)


def test_contract_reindexing_rule():
    # path 0-1-2-3: contracting (2, 3) leaves the merged vertex in slot 2
    g = path_graph(4)
    h = contract_edge(g, 2, 3)
    assert h == path_graph(3)
    # star centred at 0: removing 0 shifts leaf 3 (now merged) down to slot 2
    s = star_graph(3)
    m = contract_edge(s, 3, 0)
    assert m.n == 3 and m.degree(2) == 2


def test_contract_requires_an_edge():
    with pytest.raises(PreconditionError):
        contract_edge(path_graph(3), 0, 2)


def test_contract_all_edges_small_graphs():
    for n in range(2, 7):
        for g in enumerate_labeled_graphs(n):
            for u, v in g.edges():
                for a, b in ((u, v), (v, u)):
                    h = contract_edge(g, a, b)
                    # Graph() re-validates symmetry and irreflexivity
                    Graph(h.n, h.rows)
                    assert h.n == n - 1
                    merged = a if a < b else a - 1
                    expect = {w for w in g.neighbors(a) + g.neighbors(b) if w not in (a, b)}
                    expect = {w - (w > b) for w in expect}
                    assert set(h.neighbors(merged)) == expect


def test_induced_subgraph_examples():
    k3, keep = induced_subgraph(complete_graph(5), [4, 1, 2])
    assert k3 == complete_graph(3) and keep == [1, 2, 4]
    assert induced_subgraph(cycle_graph(4), [0, 1, 2])[0] == path_graph(3)
    assert induced_subgraph(cycle_graph(4), [])[0].n == 0
    with pytest.raises(InputError):
        induced_subgraph(cycle_graph(4), [7])


def test_delete_vertex():
    assert delete_vertex(complete_graph(4), 0) == complete_graph(3)
    assert delete_vertex(path_graph(3), 1) == empty_graph(2)


def test_disjoint_union_examples():
    k2 = complete_graph(2)
    assert disjoint_union([k2, k2]) == from_edge_list(4, [(0, 1), (2, 3)])
    assert disjoint_union([]).n == 0


def test_disjoint_union_census_additivity(rng):
    for _ in range(200):
        parts = [random_graph(rng, rng.randint(0, 6), rng.random()) for _ in range(rng.randint(1, 3))]
        u = disjoint_union(parts)
        expect = sum(count_cliques_naive(p) for p in parts) - (len(parts) - 1)
        assert count_cliques_naive(u) == expect
        assert clique_census(u).total == expect


def test_shape_constructor_examples():
    assert complement_of_matching(ShapeParams(0, 4)) == complete_graph(4)
    # the 4-cycle 0-2-1-3, so pairs (0,1) and (2,3) are the diagonals
    assert complement_of_matching(ShapeParams(2, 0)) == relabel(cycle_graph(4), [0, 2, 1, 3])
    k3_minus = complement_of_matching(ShapeParams(1, 1))
    assert k3_minus.n == 3 and k3_minus.edge_count == 2 and not k3_minus.has_edge(0, 1)


@pytest.mark.parametrize("a", range(5))
@pytest.mark.parametrize("b", range(5))
def test_shape_invariants(a, b):
    g = complement_of_matching(ShapeParams(a, b))
    assert g.n == 2 * a + b
    assert g.max_missing_degree() <= 1
    assert complement(g).edge_count == a
    for i in range(a):
        assert not g.has_edge(2 * i, 2 * i + 1)
    if a >= 1:
        assert clique_number(g) == a + b


def test_shape_params_validation():
    with pytest.raises(InputError):
        ShapeParams(-1, 0)
    assert ShapeParams(3, 1).clique_count == 54
    assert ShapeParams(3, 1).order == 7


@given(graphs(max_n=8))
def test_relabel_round_trip(g):
    perm = list(range(g.n))
    random.Random(g.edge_count).shuffle(perm)
    inverse = [0] * g.n
    for i, p in enumerate(perm):
        inverse[p] = i
    h = relabel(g, perm)
    assert h.edge_count == g.edge_count
    assert relabel(h, inverse) == g


@given(graphs(max_n=9))
def test_components_partition_vertices(g):
    comps = g.components()
    assert sorted(v for c in comps for v in c) == list(range(g.n))
    assert g.is_connected() == (len(comps) <= 1)
