"""Minor containment with witness models, and Hadwiger numbers.

A model of ``H`` in ``G`` assigns each vertex of ``H`` a connected, nonempty
branch set of ``G``; branch sets are pairwise disjoint and every edge of ``H``
is realised by at least one ``G``-edge between the two branch sets.
"""
from __future__ import annotations

from dataclasses import dataclass

from .cliques import clique_number, maximum_clique
from .errors import BudgetExhausted, GuardError, PreconditionError
from .graph import Graph, _bits, complete_graph, component_of, induced_subgraph
from .matching import maximum_matching

DEFAULT_BUDGET = 5_000_000
HADWIGER_MAX_VERTICES = 12


@dataclass(frozen=True)
class MinorModel:
    branch_sets: tuple[frozenset[int], ...]

    def problems(self, g: Graph, h: Graph) -> list[str]:
        """Every violated model condition; empty iff the model is valid."""
        out = []
        if len(self.branch_sets) != h.n:
            return [f"expected {h.n} branch sets, got {len(self.branch_sets)}"]
        masks = []
        used = 0
        for u, bs in enumerate(self.branch_sets):
            if not bs:
                out.append(f"branch set of {u} is empty")
                masks.append(0)
                continue
            if any(not 0 <= v < g.n for v in bs):
                out.append(f"branch set of {u} leaves the host graph")
                masks.append(0)
                continue
            m = sum(1 << v for v in bs)
            if m & used:
                out.append(f"branch set of {u} overlaps an earlier one")
            used |= m
            if component_of(g, min(bs), m) != m:
                out.append(f"branch set of {u} is not connected")
            masks.append(m)
        for u, w in h.edges():
            reach = 0
            for v in _bits(masks[u]):
                reach |= g.rows[v]
            if not reach & masks[w]:
                out.append(f"edge ({u}, {w}) of H is not realised")
        return out

    def is_valid(self, g: Graph, h: Graph) -> bool:
        return not self.problems(g, h)

    def validate(self, g: Graph, h: Graph) -> "MinorModel":
        bad = self.problems(g, h)
        if bad:
            raise AssertionError("invalid minor model: " + "; ".join(bad))
        return self

    def relabeled(self, mapping) -> "MinorModel":
        return MinorModel(tuple(frozenset(mapping[v] for v in bs) for bs in self.branch_sets))


def _connected_subsets(rows, allowed: int, cap: int) -> list[int]:
    """All connected vertex sets inside ``allowed`` with at most ``cap`` vertices."""
    out = []

    def extend(sub, size, cand, excluded):
        out.append(sub)
        if size == cap:
            return
        while cand:
            low = cand & -cand
            cand ^= low
            v = low.bit_length() - 1
            nxt = (cand | rows[v]) & allowed & ~sub & ~low & ~excluded
            extend(sub | low, size + 1, nxt, excluded)
            excluded |= low

    for r in _bits(allowed):
        below = (1 << (r + 1)) - 1
        extend(1 << r, 1, rows[r] & allowed & ~below, below)
    out.sort(key=lambda m: (m.bit_count(), m))
    return out


def _twin_predecessors(h: Graph, order: list[int]) -> dict[int, int]:
    """Map each vertex to the twin placed just before it (if any).

    Twins (equal open or equal closed neighborhoods) can be permuted by an
    automorphism of ``h``, so models may be assumed to list a twin class in
    increasing order of least branch-set vertex.
    """
    groups: dict[tuple[str, int], list[int]] = {}
    for v in range(h.n):
        groups.setdefault(("open", h.rows[v]), []).append(v)
        groups.setdefault(("closed", h.rows[v] | (1 << v)), []).append(v)
    position = {v: i for i, v in enumerate(order)}
    pred = {}
    for members in groups.values():
        if len(members) < 2:
            continue
        members.sort(key=position.__getitem__)
        for a, b in zip(members, members[1:]):
            pred[b] = a
    return pred


def _placement_order(h: Graph) -> list[int]:
    """Highest degree first, then greedily the vertex with most placed neighbors."""
    order: list[int] = []
    placed = 0
    left = set(range(h.n))
    while left:
        v = max(left, key=lambda u: ((h.rows[u] & placed).bit_count(), h.degree(u), -u))
        order.append(v)
        placed |= 1 << v
        left.remove(v)
    return order


class _Search:
    def __init__(self, g: Graph, h: Graph, budget: int):
        self.g = g
        self.h = h
        self.budget = budget
        self.steps = 0
        self.order = _placement_order(h)
        self.pred = _twin_predecessors(h, self.order)
        self.cache: dict[int, list[int]] = {}
        self.max_cap = g.n - h.n + 1

    def subsets(self, free: int) -> list[int]:
        got = self.cache.get(free)
        if got is None:
            got = _connected_subsets(self.g.rows, free, self.max_cap)
            self.cache[free] = got
        return got

    def reach(self, mask: int) -> int:
        r = 0
        for v in _bits(mask):
            r |= self.g.rows[v]
        return r

    def run(self):
        self.assign: dict[int, int] = {}
        self.touch: dict[int, int] = {}
        if self._place(0, self.g.full_mask):
            return MinorModel(tuple(frozenset(_bits(self.assign[u])) for u in range(self.h.n)))
        return None

    def _feasible(self, depth: int, free: int) -> bool:
        rest = self.order[depth:]
        if free.bit_count() < len(rest):
            return False
        comps = None
        for w in rest:
            need = [self.touch[p] for p in _bits(self.h.rows[w]) if p in self.assign]
            if not need:
                continue
            if comps is None:
                comps = []
                seen = 0
                for v in _bits(free):
                    if not seen >> v & 1:
                        c = component_of(self.g, v, free)
                        seen |= c
                        comps.append(c)
            if not any(all(c & t for t in need) for c in comps):
                return False
        return True

    def _place(self, depth: int, free: int) -> bool:
        if depth == len(self.order):
            return True
        u = self.order[depth]
        cap = free.bit_count() - (len(self.order) - depth - 1)
        need = [self.touch[p] for p in _bits(self.h.rows[u]) if p in self.assign]
        twin = self.pred.get(u)
        floor = (self.assign[twin] & -self.assign[twin]) if twin is not None else 0
        for bs in self.subsets(free):
            if bs.bit_count() > cap:
                break
            if (bs & -bs) <= floor:
                continue
            if any(not bs & t for t in need):
                continue
            self.steps += 1
            if self.steps > self.budget:
                raise BudgetExhausted(f"minor search exceeded {self.budget} steps", self.steps)
            self.assign[u] = bs
            self.touch[u] = self.reach(bs)
            rest = free & ~bs
            if self._feasible(depth + 1, rest) and self._place(depth + 1, rest):
                return True
            del self.assign[u]
            del self.touch[u]
        return False


def find_minor_model(g: Graph, h: Graph, budget: int = DEFAULT_BUDGET) -> MinorModel | None:
    """A model of ``h`` in ``g``, or ``None`` when ``h`` is not a minor of ``g``.

    Raises :class:`BudgetExhausted` if the backtracking search needs more
    than ``budget`` branch-set placements; that outcome is indeterminate.
    """
    if h.n == 0:
        return MinorModel(())
    if h.n > g.n or h.edge_count > g.edge_count:
        return None
    if h.is_connected() and not g.is_connected():
        spent = 0
        for comp in g.components():
            if len(comp) < h.n:
                continue
            sub, back = induced_subgraph(g, comp)
            if h.edge_count > sub.edge_count:
                continue
            search = _Search(sub, h, budget - spent)
            try:
                model = search.run()
            finally:
                spent += search.steps
            if model is not None:
                return model.relabeled(back)
        return None
    return _Search(g, h, budget).run()


def is_minor(g: Graph, h: Graph, budget: int = DEFAULT_BUDGET) -> bool:
    return find_minor_model(g, h, budget) is not None


def hadwiger_exact(g: Graph, budget: int = DEFAULT_BUDGET) -> tuple[int, MinorModel]:
    """Largest ``k`` with a ``K_k`` minor, with a witness model."""
    if g.n > HADWIGER_MAX_VERTICES:
        raise GuardError(
            f"exhaustive Hadwiger search is limited to {HADWIGER_MAX_VERTICES} vertices, got {g.n}"
        )
    best = maximum_clique(g)
    k = len(best)
    model = MinorModel(tuple(frozenset([v]) for v in best))
    while k < g.n:
        found = find_minor_model(g, complete_graph(k + 1), budget)
        if found is None:
            break
        k, model = k + 1, found
    return k, model


def dominating_pair_graph(g: Graph) -> Graph:
    """Edges ``uv`` of ``g`` whose endpoints together dominate ``g``."""
    full = g.full_mask
    rows = [0] * g.n
    for u in range(g.n):
        closed_u = g.rows[u] | (1 << u)
        for v in _bits(g.rows[u]):
            if closed_u | g.rows[v] | (1 << v) == full:
                rows[u] |= 1 << v
    return Graph._trusted(g.n, rows)


def dense_precondition(g: Graph) -> bool:
    """``n >= omega + 2*Delta**2 + 2`` with Delta the maximum missing degree."""
    delta = g.max_missing_degree()
    return g.n >= clique_number(g) + 2 * delta * delta + 2


def hadwiger_dense(g: Graph) -> tuple[int, MinorModel]:
    """Hadwiger number of a very dense graph, built constructively.

    A maximum clique gives singleton branch sets; the remaining vertices are
    paired along a maximum matching of the dominating-pair graph restricted
    to them. Each pair dominates ``g``, so all branch sets touch.
    """
    delta = g.max_missing_degree()
    omega = clique_number(g)
    if g.n < omega + 2 * delta * delta + 2:
        raise PreconditionError(
            f"need n >= omega + 2*Delta^2 + 2, got n={g.n}, omega={omega}, Delta={delta}"
        )
    clique = maximum_clique(g)
    rest = [v for v in range(g.n) if v not in set(clique)]
    aux, back = induced_subgraph(dominating_pair_graph(g), rest)
    matching = maximum_matching(aux)
    if matching.size != len(rest) // 2:
        raise RuntimeError(
            f"dominating-pair graph has a matching of size {matching.size}, "
            f"expected {len(rest) // 2}"
        )
    sets = [frozenset([v]) for v in clique]
    sets += [frozenset((back[u], back[v])) for u, v in sorted(matching.edges)]
    model = MinorModel(tuple(sets))
    model.validate(g, complete_graph(len(sets)))
    return len(sets), model
