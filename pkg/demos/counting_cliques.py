"""Counting cliques exactly, from small graphs to huge matching complements.

Run with ``python3 demos/counting_cliques.py``.
"""
from cliqueminor import ShapeParams, clique_census, complement_of_matching, cycle_graph

# The four-cycle has the empty clique, four vertices and four edges.
census = clique_census(cycle_graph(4))
print("C4:", census.total, "cliques, omega =", census.omega)
print("fraction of cliques through vertex 0:", census.alpha(0))

# Removing a perfect matching from a clique multiplies the count by 3 per
# missing pair and by 2 per untouched vertex.
for a, b in [(1, 0), (2, 1), (3, 3)]:
    g = complement_of_matching(ShapeParams(a, b))
    print(f"K({a},{b}) on {g.n} vertices:", clique_census(g).total, "=", 3 ** a * 2 ** b)

# Counts are Python integers, so nothing is lost far beyond 2**53.
big = clique_census(complement_of_matching(ShapeParams(3, 80)))
print("K(3,80):", big.total)
print("exact:", big.total == 27 * 2 ** 80)
