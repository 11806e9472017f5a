"""Minor search with explicit branch sets, and two routes to the Hadwiger number."""
from cliqueminor import (
    BudgetExhausted,
    ShapeParams,
    complement_of_matching,
    complete_graph,
    cycle_graph,
    find_minor_model,
    hadwiger_dense,
    hadwiger_exact,
)
from cliqueminor.minors import dense_precondition

c4 = cycle_graph(4)
model = find_minor_model(c4, complete_graph(3))
print("K3 inside C4, branch sets:", [sorted(s) for s in model.branch_sets])
print("K4 inside C4:", find_minor_model(c4, complete_graph(4)))

# Eight vertices with a perfect matching removed: dense enough for the
# constructive route, which must agree with exhaustive search.
g = complement_of_matching(ShapeParams(4, 0))
print("dense construction applies:", dense_precondition(g))
k_dense, dense_model = hadwiger_dense(g)
k_exact, _ = hadwiger_exact(g)
dense_model.validate(g, complete_graph(k_dense))
print("Hadwiger number:", k_dense, "(dense)", k_exact, "(exact)")

# A tight step budget gives "don't know", never a wrong "no".
try:
    find_minor_model(complete_graph(8), complete_graph(6), budget=1)
except BudgetExhausted as exc:
    print("budget ran out after", exc.steps, "steps; answer is indeterminate")
