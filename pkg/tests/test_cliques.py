import random
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given

from cliqueminor.cliques import (
    MIN_DEGREE_DELETE,
    NON_NEIGHBOR_DELETE,
    SELECTED,
    clique_census,
    clique_number,
    count_cliques_naive,
    maximum_clique,
    peeling_trace,
)
from cliqueminor.enumeration import census_table, enumerate_labeled_graphs
from cliqueminor.errors import GuardError, PreconditionError
from cliqueminor.graph import (
    ShapeParams,
    complement_of_matching,
    complete_graph,
    cycle_graph,
    empty_graph,
    path_graph,
    relabel,
)

from conftest import graphs, random_graph


@pytest.mark.parametrize("n", range(8))
def test_complete_graph_census(n):
    census = clique_census(complete_graph(n))
    assert census.total == 2 ** n
    assert census.omega == n
    assert all(census.alpha(v) == Fraction(1, 2) for v in range(n))


@pytest.mark.parametrize("a", range(6))
@pytest.mark.parametrize("b", range(6))
def test_shape_census(a, b):
    assert clique_census(complement_of_matching(ShapeParams(a, b))).total == 3 ** a * 2 ** b


def test_cycle_five():
    census = clique_census(cycle_graph(5))
    assert census.total == 11
    assert census.fractions == (Fraction(3, 11),) * 5


def test_naive_examples():
    assert count_cliques_naive(empty_graph(0)) == 1
    assert count_cliques_naive(complete_graph(3)) == 8
    assert count_cliques_naive(cycle_graph(4)) == 9


def test_naive_guard():
    with pytest.raises(GuardError):
        count_cliques_naive(empty_graph(21))


def test_large_counts_are_exact():
    # 27 * 2**60 does not fit in a double's mantissa
    g = complement_of_matching(ShapeParams(3, 60))
    census = clique_census(g)
    assert census.total == 27 * 2 ** 60
    assert census.containing[0] == 9 * 2 ** 60


def test_census_matches_naive_random():
    rng = random.Random(7)
    for _ in range(1000):
        n = rng.randint(7, 12)
        g = random_graph(rng, n, rng.uniform(0.2, 0.9))
        assert clique_census(g).total == count_cliques_naive(g)


def test_census_table_matches_peeling():
    # independent route: the vectorised subset scan
    for n in range(6):
        table = census_table(n)
        for mask, g in enumerate(enumerate_labeled_graphs(n)):
            census = clique_census(g)
            assert census.total == table.total[mask]
            assert census.omega == table.omega[mask]
            assert list(census.containing) == list(table.containing[:, mask])


def test_alpha_at_most_half_with_equality_for_universal_vertices():
    for n in range(1, 7):
        table = census_table(n)
        twice = 2 * table.containing
        assert np.all(twice <= table.total)
        for mask, g in enumerate(enumerate_labeled_graphs(n)):
            for v in range(n):
                assert (twice[v, mask] == table.total[mask]) == (g.degree(v) == n - 1)


@pytest.mark.parametrize("a", range(1, 7))
def test_matching_complement_alpha_third(a):
    census = clique_census(complement_of_matching(ShapeParams(a, 0)))
    assert set(census.fractions) == {Fraction(1, 3)}


@given(graphs(max_n=9))
def test_census_identities(g):
    census = clique_census(g)
    assert census.total >= 1
    assert all(0 <= census.alpha(v) <= Fraction(1, 2) for v in range(g.n))
    # sum of memberships is the sum of clique sizes, recomputed by brute force
    sizes = 0
    for s in range(1 << g.n):
        members = [v for v in range(g.n) if s >> v & 1]
        if g.is_clique(members):
            sizes += len(members)
    assert sum(census.containing) == sizes


@given(graphs(max_n=9))
def test_census_relabel_invariant(g):
    rng = random.Random(g.n * 1000 + g.edge_count)
    base = clique_census(g)
    for _ in range(10):
        perm = list(range(g.n))
        rng.shuffle(perm)
        other = clique_census(relabel(g, perm))
        assert other.total == base.total and other.omega == base.omega
        assert all(other.containing[perm[v]] == base.containing[v] for v in range(g.n))


@given(graphs(max_n=10))
def test_maximum_clique_is_a_clique_of_size_omega(g):
    k = maximum_clique(g)
    assert g.is_clique(k)
    assert len(k) == clique_number(g)


def test_trace_on_complete_graph():
    trace = peeling_trace(complete_graph(4), range(4))
    assert [(r, why) for _, r, why in trace.removal_order] == [(4, SELECTED), (3, SELECTED),
                                                              (2, SELECTED), (1, SELECTED)]
    assert sorted(trace.clique_order) == [0, 1, 2, 3]


def test_trace_on_four_cycle_edge():
    trace = peeling_trace(cycle_graph(4), [0, 1])
    assert trace.removal_order == [
        (0, 4, SELECTED),
        (2, 3, NON_NEIGHBOR_DELETE),
        (1, 2, SELECTED),
        (3, 1, NON_NEIGHBOR_DELETE),
    ]


def test_trace_of_empty_clique_only_deletes():
    g = path_graph(5)
    trace = peeling_trace(g, [])
    assert all(why == MIN_DEGREE_DELETE for _, _, why in trace.removal_order)
    assert [r for _, r, _ in trace.removal_order] == [5, 4, 3, 2, 1]
    assert trace.clique_order == []


def test_trace_rejects_non_clique():
    with pytest.raises(PreconditionError):
        peeling_trace(path_graph(3), [0, 2])


@given(graphs(min_n=1, max_n=8))
def test_trace_properties(g):
    k = maximum_clique(g)
    trace = peeling_trace(g, k)
    steps = trace.removal_order
    assert sorted(v for v, _, _ in steps) == list(range(g.n))
    assert sorted(trace.clique_order) == sorted(k)
    assert [r for _, r, _ in steps] == list(range(g.n, 0, -1))
    # each selected vertex is adjacent to every later-selected one
    order = trace.clique_order
    for i, u in enumerate(order):
        for w in order[i + 1:]:
            assert g.has_edge(u, w)
