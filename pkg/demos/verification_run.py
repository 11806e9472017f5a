"""Run every verification suite with small parameters and summarise."""
from cliqueminor import run_suite

QUICK = {
    "census-oracle": {"max_n": 5},
    "k-s-bound": {"max_n": 6},
    "hadwiger-dense": {},
    "shape-predicate": {"max_t": 5},
    "wood-small": {"t": 4, "n": 6},
    "small-n": {},
    "envelope-example": {"t": 2},
    "ip-lp-gap": {"max_t": 30, "families": 100},
    "social-structure": {"max_n": 5},
    "independent-fraction": {"max_n": 5},
    "union-dp": {},
}

for name, params in QUICK.items():
    res = run_suite(name, params)
    status = "pass" if res.passed else "FAIL"
    print(f"{name:22s} {status}  {res.instances:>8d} instances  {res.wall_time:6.2f}s")
