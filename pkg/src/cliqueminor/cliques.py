"""Exact clique censuses.

Every count here includes the empty clique, so ``K_n`` has ``2**n`` cliques
and the shape ``K(a, b)`` has ``3**a * 2**b``.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import GuardError, PreconditionError
from .graph import Graph, _bits

NAIVE_MAX_VERTICES = 20


@dataclass(frozen=True)
class CliqueCensus:
    total: int
    omega: int
    containing: tuple[int, ...]

    @property
    def fractions(self) -> tuple[Fraction, ...]:
        """Exact fraction of all cliques containing each vertex."""
        return tuple(Fraction(c, self.total) for c in self.containing)

    def alpha(self, v: int) -> Fraction:
        return Fraction(self.containing[v], self.total)


def _min_degree_vertex(rows, remaining: int) -> int:
    best = -1
    best_deg = None
    for v in _bits(remaining):
        d = (rows[v] & remaining).bit_count()
        if best_deg is None or d < best_deg:
            best, best_deg = v, d
    return best


def _peel_count(rows, remaining: int) -> tuple[int, int]:
    """Number of cliques inside ``remaining`` and the largest clique size.

    Peels a minimum-degree vertex (lowest index on ties), counts the cliques
    having it as their first-peeled vertex by recursing into its remaining
    neighborhood, then deletes it.
    """
    total = 1
    omega = 0
    while remaining:
        size = remaining.bit_count()
        v = _min_degree_vertex(rows, remaining)
        nbhd = rows[v] & remaining
        if nbhd.bit_count() == size - 1:
            # v sees everything left; by minimality so does every other vertex
            return total + (2 ** size - 1), max(omega, size)
        sub_total, sub_omega = _peel_count(rows, nbhd)
        total += sub_total
        if sub_omega + 1 > omega:
            omega = sub_omega + 1
        remaining ^= 1 << v
    return total, omega


def clique_census(g: Graph) -> CliqueCensus:
    total, omega = _peel_count(g.rows, g.full_mask)
    containing = tuple(_peel_count(g.rows, g.rows[v])[0] for v in range(g.n))
    return CliqueCensus(total, omega, containing)


def clique_count(g: Graph) -> int:
    return _peel_count(g.rows, g.full_mask)[0]


def clique_number(g: Graph) -> int:
    return _peel_count(g.rows, g.full_mask)[1]


def maximum_clique(g: Graph) -> list[int]:
    """A largest clique, as a sorted vertex list."""
    best: list[int] = []

    def grow(current, candidates):
        nonlocal best
        if len(current) + candidates.bit_count() <= len(best):
            return
        if not candidates:
            best = list(current)
            return
        for v in _bits(candidates):
            if len(current) + candidates.bit_count() <= len(best):
                return
            grow(current + [v], candidates & g.rows[v] & ~((1 << (v + 1)) - 1))
            candidates &= ~(1 << v)

    grow([], g.full_mask)
    return sorted(best)


def count_cliques_naive(g: Graph) -> int:
    """Count cliques by testing every vertex subset."""
    n = g.n
    if n > NAIVE_MAX_VERTICES:
        raise GuardError(f"naive counting is limited to {NAIVE_MAX_VERTICES} vertices, got {n}")
    is_clique = bytearray(1 << n)
    is_clique[0] = 1
    count = 1
    rows = g.rows
    for s in range(1, 1 << n):
        low = s & -s
        rest = s ^ low
        if is_clique[rest] and rows[low.bit_length() - 1] & rest == rest:
            is_clique[s] = 1
            count += 1
    return count


# -- peeling trace -------------------------------------------------------

MIN_DEGREE_DELETE = "min-degree-delete"
SELECTED = "selected-into-clique"
NON_NEIGHBOR_DELETE = "non-neighbor-delete"


@dataclass(frozen=True)
class PeelStep:
    vertex: int
    remaining: int
    reason: str


@dataclass(frozen=True)
class PeelingTrace:
    steps: tuple[PeelStep, ...]

    @property
    def removal_order(self):
        return [(s.vertex, s.remaining, s.reason) for s in self.steps]

    @property
    def clique_order(self) -> list[int]:
        return [s.vertex for s in self.steps if s.reason == SELECTED]


def peeling_trace(g: Graph, target_clique) -> PeelingTrace:
    """Replay the peeling process along one clique.

    While no clique vertex is selectable, a minimum-degree vertex is deleted.
    A clique vertex is selected as soon as it attains the minimum degree, so
    every deleted vertex has degree strictly smaller than the clique vertex
    selected next. After a selection the selected vertex leaves the graph and
    its non-neighbors are deleted. Peeling continues until the graph is
    empty, so every vertex appears exactly once. ``remaining`` is the order
    of the current graph just before the step.
    """
    target = 0
    for v in target_clique:
        if not 0 <= v < g.n:
            raise PreconditionError(f"vertex {v} is not in the graph")
        target |= 1 << v
    if not g.is_clique(_bits(target)):
        raise PreconditionError("target vertex set is not a clique")
    rows = g.rows
    remaining = g.full_mask
    steps = []
    while remaining:
        degs = {v: (rows[v] & remaining).bit_count() for v in _bits(remaining)}
        low = min(degs.values())
        in_target = [v for v in _bits(remaining & target) if degs[v] == low]
        if in_target:
            v = in_target[0]
            steps.append(PeelStep(v, remaining.bit_count(), SELECTED))
            remaining ^= 1 << v
            target ^= 1 << v
            for w in _bits(remaining & ~rows[v]):
                steps.append(PeelStep(w, remaining.bit_count(), NON_NEIGHBOR_DELETE))
                remaining ^= 1 << w
        else:
            v = next(u for u in _bits(remaining) if degs[u] == low)
            steps.append(PeelStep(v, remaining.bit_count(), MIN_DEGREE_DELETE))
            remaining ^= 1 << v
    return PeelingTrace(tuple(steps))
