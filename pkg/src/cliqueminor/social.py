"""Social graphs: graphs in which no edge contraction increases the clique count.

Vertices are *good* when they lie in at least an ``alpha*`` fraction of all
cliques, ``alpha* = (2 - sqrt 2)/2 - 1/1000``, and *bad* otherwise. The
threshold is irrational, so the comparison is done in integers.
"""
from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass
from fractions import Fraction

from .cliques import CliqueCensus, clique_census, clique_count
from .errors import GuardError
from .graph import Graph, _bits, contract_edge

ALPHA_STAR_TEXT = "(2 - sqrt(2))/2 - 1/1000"
ALPHA_STAR_FLOAT = (2 - math.sqrt(2)) / 2 - 0.001

SOCIAL_MAX_VERTICES = 12
INDEPENDENT_MAX_VERTICES = 10
EXHAUSTIVE_CONTRACTION_MAX_VERTICES = 8


def below_alpha_star(alpha: Fraction) -> bool:
    """Exact test of ``alpha < (2 - sqrt 2)/2 - 1/1000``."""
    alpha = Fraction(alpha)
    p, q = alpha.numerator, alpha.denominator
    # alpha + 1/1000 = s/r; s/r < 1 - sqrt(2)/2  <=>  r - s > 0 and 2(r-s)^2 > r^2
    r, s = 1000 * q, 1000 * p + q
    return r - s > 0 and 2 * (r - s) ** 2 > r * r


def bad_vertices(g: Graph, threshold: Fraction | None = None,
                 census: CliqueCensus | None = None) -> frozenset[int]:
    """Vertices lying in fewer than an ``alpha*`` fraction of the cliques.

    ``threshold`` replaces ``alpha*`` by a rational, for experimentation only.
    """
    census = census or clique_census(g)
    if threshold is None:
        return frozenset(v for v in range(g.n) if below_alpha_star(census.alpha(v)))
    return frozenset(v for v in range(g.n) if census.alpha(v) < threshold)


def core_vertices(g: Graph, bad) -> frozenset[int]:
    """Vertices that are neither bad nor non-adjacent to a bad vertex."""
    bad_mask = 0
    for v in bad:
        bad_mask |= 1 << v
    out = []
    for v in range(g.n):
        if bad_mask >> v & 1:
            continue
        non_nbrs = g.full_mask & ~g.rows[v] & ~(1 << v)
        if not non_nbrs & bad_mask:
            out.append(v)
    return frozenset(out)


@dataclass(frozen=True)
class SocialReport:
    is_social: bool
    violating_edge: tuple[int, int] | None
    bad_vertices: frozenset[int]
    structure_violations: frozenset[int]
    max_missing_degree: int
    outside_core: int
    alpha_star: str = ALPHA_STAR_TEXT

    @property
    def bad_bound_ok(self) -> bool:
        return len(self.bad_vertices) <= 300 * self.max_missing_degree ** 2

    @property
    def outside_core_bound_ok(self) -> bool:
        return self.outside_core <= 600 * self.max_missing_degree ** 3

    @property
    def structure_holds(self) -> bool:
        """What the structure lemmas promise; trivially true for non-social graphs."""
        if not self.is_social:
            return True
        return not self.structure_violations and self.bad_bound_ok and self.outside_core_bound_ok


def first_improving_contraction(g: Graph, base: int | None = None):
    """Lowest edge whose contraction strictly increases the clique count, or ``None``."""
    if base is None:
        base = clique_count(g)
    for u, v in g.edges():
        if clique_count(contract_edge(g, u, v)) > base:
            return (u, v)
    return None


def is_social(g: Graph) -> SocialReport:
    if g.n > SOCIAL_MAX_VERTICES:
        raise GuardError(f"social check is limited to {SOCIAL_MAX_VERTICES} vertices, got {g.n}")
    census = clique_census(g)
    edge = first_improving_contraction(g, census.total)
    bad = bad_vertices(g, census=census)
    core = core_vertices(g, bad)
    violations = frozenset(v for v in core if g.missing_degree(v) >= 2)
    return SocialReport(
        is_social=edge is None,
        violating_edge=edge,
        bad_vertices=bad,
        structure_violations=violations,
        max_missing_degree=g.max_missing_degree(),
        outside_core=g.n - len(core),
    )


def verify_structure(g: Graph) -> SocialReport:
    """Social report; for social graphs ``structure_holds`` must be true."""
    return is_social(g)


def independent_fraction_violation(g: Graph, census: CliqueCensus | None = None):
    """An independent set all of whose vertices lie in more than ``1/(|I|+1)``
    of the cliques, or ``None`` if there is none."""
    if g.n > INDEPENDENT_MAX_VERTICES:
        raise GuardError(
            f"independent-set scan is limited to {INDEPENDENT_MAX_VERTICES} vertices, got {g.n}"
        )
    census = census or clique_census(g)
    total = census.total
    counts = census.containing
    found = None

    def walk(members, low, cands):
        nonlocal found
        for v in _bits(cands):
            grown = members + [v]
            least = min(low, counts[v])
            if least * (len(grown) + 1) > total:
                found = grown
                return True
            later = cands & ~g.rows[v] & ~((1 << (v + 1)) - 1)
            if walk(grown, least, later):
                return True
        return False

    walk([], total, g.full_mask)
    return None if found is None else frozenset(found)


def verify_independent_fraction(g: Graph) -> bool:
    """Every independent set ``I`` has a vertex in at most ``1/(|I|+1)`` of the cliques."""
    return independent_fraction_violation(g) is None


@dataclass(frozen=True)
class ContractionResult:
    graph: Graph
    census: CliqueCensus
    mode: str
    contractions: tuple[tuple[int, int], ...]


def best_contraction_minor(g: Graph, mode: str = "auto") -> ContractionResult:
    """A graph with most cliques among those obtained from ``g`` by contractions.

    ``exact`` explores every contraction sequence (breadth first, ties go to
    the earliest graph found); ``heuristic`` repeatedly applies the best
    single contraction. ``auto`` is exact up to 8 vertices.
    """
    if mode == "auto":
        mode = "exact" if g.n <= EXHAUSTIVE_CONTRACTION_MAX_VERTICES else "heuristic"
    if mode == "exact":
        if g.n > EXHAUSTIVE_CONTRACTION_MAX_VERTICES:
            raise GuardError(
                f"exhaustive contraction search is limited to "
                f"{EXHAUSTIVE_CONTRACTION_MAX_VERTICES} vertices, got {g.n}"
            )
        best, best_path, best_count = g, (), clique_count(g)
        seen = {g.rows}
        queue = deque([(g, ())])
        while queue:
            h, path = queue.popleft()
            for u, v in h.edges():
                child = contract_edge(h, u, v)
                if child.rows in seen:
                    continue
                seen.add(child.rows)
                child_path = path + ((u, v),)
                c = clique_count(child)
                if c > best_count:
                    best, best_path, best_count = child, child_path, c
                queue.append((child, child_path))
        return ContractionResult(best, clique_census(best), "exact", best_path)
    if mode != "heuristic":
        raise ValueError(f"unknown mode {mode!r}")
    current, path, count = g, (), clique_count(g)
    while True:
        step = None
        for u, v in current.edges():
            c = clique_count(contract_edge(current, u, v))
            if c > count:
                step, count = (u, v), c
        if step is None:
            break
        current = contract_edge(current, *step)
        path += (step,)
    return ContractionResult(current, clique_census(current), "heuristic", path)
