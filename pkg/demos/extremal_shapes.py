"""How many cliques can a graph have while avoiding given minors?

A forbidden minor is summarised by its order t and the size x of a maximum
matching in its complement. The best graphs are built from K(a,b) pieces.
"""
from cliqueminor import (
    ForbiddenMinorSpec,
    envelope_build,
    extremal_union_construct,
    family_ip_optimum,
    single_minor_optimum,
    small_n_bound,
    wood_bound,
)

opt = single_minor_optimum(ForbiddenMinorSpec.clique(6))
print("avoid K6: best shape", (opt.shape.a, opt.shape.b), "with", opt.clique_count, "cliques")

fam = [ForbiddenMinorSpec(8, 0), ForbiddenMinorSpec(10, 5)]
env = envelope_build(fam)
print("envelope corners:", [(str(a), str(b)) for a, b in env.extreme_points])
best = family_ip_optimum(fam)
print("relaxed optimum:", (str(best.lp.a), str(best.lp.b)))
print("integer optimum:", (best.shape.a, best.shape.b), "count", best.clique_count)
print("within a factor 6 of the relaxation:", best.within_factor(6))

# When n is fixed, glue pieces together. Unions of shapes are not always
# best: other K4-minor-free graphs on 8 vertices do better.
union = extremal_union_construct([ForbiddenMinorSpec.clique(4)], 8)
print("K4-minor-free on 8 vertices:", [(p.a, p.b) for p in union.pieces], union.count)
print("closed form for K4-minor-free, n = 8:", wood_bound(4, 8))

small = small_n_bound(6, 7)
print("K6-minor-free on 7 vertices:", small.count, "vs", small.theorem_value)
