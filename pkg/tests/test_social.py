import math
import random
from fractions import Fraction
from itertools import combinations

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cliqueminor.cliques import clique_census, clique_count
from cliqueminor.enumeration import census_table, enumerate_labeled_graphs
from cliqueminor.errors import GuardError
from cliqueminor.graph import (
    ShapeParams,
    all_pairs,
    complement_of_matching,
    complete_graph,
    contract_edge,
    cycle_graph,
    empty_graph,
    from_edge_list,
    induced_subgraph,
    path_graph,
    relabel,
    star_graph,
)
from cliqueminor.social import (
    ALPHA_STAR_FLOAT,
    bad_vertices,
    below_alpha_star,
    best_contraction_minor,
    core_vertices,
    first_improving_contraction,
    independent_fraction_violation,
    is_social,
    verify_independent_fraction,
    verify_structure,
)

from conftest import graphs, random_graph

SCALE = 10 ** 60
# floor and ceiling of (1 - sqrt(2)/2 - 1/1000) * SCALE
_ROOT = math.isqrt(2 * SCALE * SCALE)  # floor(sqrt(2) * SCALE)
STAR_LOW = SCALE - (_ROOT + 1) // 2 - SCALE // 1000 - 1
STAR_HIGH = SCALE - _ROOT // 2 - SCALE // 1000 + 1


def below_by_bracketing(alpha: Fraction):
    """Decide alpha < alpha* from a 60-digit bracket; None when too close to call."""
    scaled = alpha * SCALE
    if scaled < STAR_LOW:
        return True
    if scaled > STAR_HIGH:
        return False
    return None


def test_threshold_against_bracketing():
    rng = random.Random(0)
    for _ in range(20000):
        q = rng.randint(1, 10 ** 6)
        alpha = Fraction(rng.randint(0, q), q)
        expect = below_by_bracketing(alpha)
        assert expect is not None
        assert below_alpha_star(alpha) == expect


def test_threshold_near_the_constant():
    # best rational approximations straddle the constant
    for den in (10 ** k for k in range(1, 25)):
        num = math.floor(ALPHA_STAR_FLOAT * den)
        lo, hi = Fraction(num, den), Fraction(num + 1, den)
        for alpha in (lo, hi):
            expect = below_by_bracketing(alpha)
            if expect is not None:
                assert below_alpha_star(alpha) == expect


def test_threshold_simple_values():
    assert not below_alpha_star(Fraction(1, 3))
    assert not below_alpha_star(Fraction(1, 2))
    assert below_alpha_star(Fraction(2, 7))
    assert below_alpha_star(Fraction(1, 4))
    assert 0.2918 < ALPHA_STAR_FLOAT < 0.2919


def test_bad_vertex_examples():
    for n in range(1, 7):
        assert bad_vertices(complete_graph(n)) == frozenset()
    for a in range(1, 5):
        assert bad_vertices(complement_of_matching(ShapeParams(a, 0))) == frozenset()
    star = star_graph(3)
    census = clique_census(star)
    assert census.total == 8
    assert census.alpha(1) == Fraction(1, 4)
    assert bad_vertices(star) == frozenset({1, 2, 3})


def test_threshold_override():
    star = star_graph(3)
    assert bad_vertices(star, threshold=Fraction(1, 5)) == frozenset()
    assert bad_vertices(star, threshold=Fraction(1, 2)) == frozenset({1, 2, 3})
    assert bad_vertices(star, threshold=Fraction(3, 5)) == frozenset(range(4))


@given(graphs(max_n=8))
@settings(max_examples=80)
def test_bad_vertices_relabel_invariant(g):
    perm = list(range(g.n))
    random.Random(g.edge_count + 3).shuffle(perm)
    bad = bad_vertices(g)
    assert bad_vertices(relabel(g, perm)) == frozenset(perm[v] for v in bad)


def test_social_examples():
    for n in range(1, 7):
        assert is_social(complete_graph(n)).is_social
    c4 = is_social(cycle_graph(4))
    assert c4.is_social and c4.violating_edge is None
    assert c4.structure_violations == frozenset() and c4.structure_holds
    # regression value for K(1,3)
    k13 = complement_of_matching(ShapeParams(1, 3))
    report = is_social(k13)
    assert report.is_social
    assert report.bad_vertices == frozenset()
    assert report.structure_holds


def test_smallest_non_social_graph():
    # first non-social labeled graph in mask order: 15 cliques, 16 after contracting (0, 4)
    g = from_edge_list(5, [(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4), (2, 3)])
    report = is_social(g)
    assert not report.is_social
    assert report.violating_edge == (0, 4)
    assert clique_count(g) == 15
    assert clique_count(contract_edge(g, 0, 4)) == 16
    assert report.structure_holds
    assert best_contraction_minor(g).census.total >= 16


def test_social_iff_no_violating_edge_exhaustive():
    for n in range(6):
        for g in enumerate_labeled_graphs(n):
            report = is_social(g)
            assert report.is_social == (report.violating_edge is None)
            base = clique_count(g)
            increases = [e for e in g.edges() if clique_count(contract_edge(g, *e)) > base]
            assert report.violating_edge == (increases[0] if increases else None)


def test_social_guard():
    with pytest.raises(GuardError):
        is_social(empty_graph(13))
    with pytest.raises(GuardError):
        independent_fraction_violation(empty_graph(11))


def test_structure_examples():
    assert verify_structure(cycle_graph(4)).structure_violations == frozenset()
    assert verify_structure(complete_graph(5)).structure_violations == frozenset()
    assert verify_structure(complete_graph(5)).max_missing_degree == 0


def test_core_vertices():
    star = star_graph(3)
    # leaves are bad and the centre sees every leaf, so the centre is in the core
    assert core_vertices(star, bad_vertices(star)) == frozenset({0})
    assert core_vertices(path_graph(3), {0}) == frozenset({1})


def test_dominating_edge_below_half_increases_count():
    # contracting a dominating edge uv gives 2 * c(G - u - v), which beats c(G)
    # exactly when fewer than half the cliques meet {u, v}
    found = 0
    for g in enumerate_labeled_graphs(6):
        census = None
        for u, v in g.edges():
            if (g.rows[u] | g.rows[v] | 1 << u | 1 << v) != g.full_mask:
                continue
            census = census or clique_census(g)
            rest = induced_subgraph(g, [w for w in range(g.n) if w not in (u, v)])[0]
            meets = census.total - clique_count(rest)
            if 2 * meets < census.total:
                found += 1
                assert clique_count(contract_edge(g, u, v)) > census.total
    assert found > 0


def test_independent_fraction_examples():
    g = empty_graph(3)
    census = clique_census(g)
    assert all(census.alpha(v) == Fraction(1, 4) for v in range(3))
    assert verify_independent_fraction(g)
    for n in range(1, 7):
        assert verify_independent_fraction(complete_graph(n))
    for n in range(6):
        for g in enumerate_labeled_graphs(n):
            assert verify_independent_fraction(g)


def test_independent_fraction_brute_force():
    rng = random.Random(2)
    for _ in range(150):
        g = random_graph(rng, rng.randint(1, 9), rng.uniform(0.1, 0.6))
        census = clique_census(g)
        violated = False
        for mask in range(1, 1 << g.n):
            members = [v for v in range(g.n) if mask >> v & 1]
            if any(g.has_edge(a, b) for a in members for b in members if a < b):
                continue
            if min(census.alpha(v) for v in members) > Fraction(1, len(members) + 1):
                violated = True
        assert violated == (independent_fraction_violation(g) is not None)
        assert not violated


def test_good_independent_sets_are_small():
    for n in range(7):
        for g in enumerate_labeled_graphs(n):
            census = clique_census(g)
            good = [v for v in range(n) if not below_alpha_star(census.alpha(v))]
            for i, a in enumerate(good):
                for b in good[i + 1:]:
                    if g.has_edge(a, b):
                        continue
                    for c in good:
                        if c not in (a, b) and not g.has_edge(a, c) and not g.has_edge(b, c):
                            pytest.fail(f"three pairwise non-adjacent good vertices in {g}")


def test_best_contraction_examples():
    c4 = cycle_graph(4)
    res = best_contraction_minor(c4)
    assert res.mode == "exact" and res.graph == c4 and res.contractions == ()
    p3 = best_contraction_minor(path_graph(3))
    assert p3.graph == path_graph(3) and p3.census.total == 6


def test_best_contraction_vs_social():
    for n in range(6):
        for g in enumerate_labeled_graphs(n):
            res = best_contraction_minor(g, "exact")
            base = clique_count(g)
            assert res.census.total >= base
            assert (res.census.total == base) == is_social(g).is_social
            # replaying the recorded contractions reproduces the graph
            h = g
            for u, v in res.contractions:
                h = contract_edge(h, u, v)
            assert h == res.graph


def test_best_contraction_vs_social_random_seven():
    rng = random.Random(17)
    for _ in range(60):
        g = random_graph(rng, 7, rng.uniform(0.2, 0.7))
        res = best_contraction_minor(g, "exact")
        assert (res.census.total == clique_count(g)) == is_social(g).is_social


def test_best_contraction_modes():
    g = path_graph(10)
    res = best_contraction_minor(g)
    assert res.mode == "heuristic"
    assert res.census.total >= clique_count(g)
    with pytest.raises(GuardError):
        best_contraction_minor(g, "exact")
    with pytest.raises(ValueError):
        best_contraction_minor(g, "sideways")


@given(st.integers(0, 4), st.integers(0, 4))
def test_bound_properties_on_shapes(a, b):
    report = is_social(complement_of_matching(ShapeParams(a, b)))
    assert report.bad_bound_ok and report.outside_core_bound_ok


def test_good_independent_sets_are_small_seven_vertices():
    n = 7
    table = census_table(n)
    masks = np.arange(table.size, dtype=np.uint32)
    index = {pair: i for i, pair in enumerate(all_pairs(n))}

    def missing(u, v):
        i = index[(min(u, v), max(u, v))]
        return ((masks >> np.uint32(i)) & np.uint32(1)) == 0

    # good: not below alpha*, via the same integer rule on whole columns
    q = table.total
    r = 1000 * q
    good = []
    for v in range(n):
        s = 1000 * table.containing[v] + q
        good.append(~((r - s > 0) & (2 * (r - s) ** 2 > r * r)))
    for a, b, c in combinations(range(n), 3):
        hit = good[a] & good[b] & good[c] & missing(a, b) & missing(a, c) & missing(b, c)
        assert not hit.any()
