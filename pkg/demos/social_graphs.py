"""Graphs where no single edge contraction raises the clique count."""
from cliqueminor import (
    best_contraction_minor,
    bad_vertices,
    clique_census,
    contract_edge,
    from_edge_list,
    is_social,
    star_graph,
)

star = star_graph(3)
print("star K_{1,3}:", clique_census(star).total, "cliques; low-fraction vertices", sorted(bad_vertices(star)))

# Smallest graph in mask order where a contraction helps.
g = from_edge_list(5, [(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4), (2, 3)])
report = is_social(g)
print("social:", report.is_social, "violating edge:", report.violating_edge)
u, v = report.violating_edge
print("cliques before and after:", clique_census(g).total, clique_census(contract_edge(g, u, v)).total)

best = best_contraction_minor(g)
print("best contraction minor:", best.census.total, "cliques via", best.contractions, f"({best.mode})")
