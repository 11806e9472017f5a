"""Immutable simple graphs stored as bit rows.

Vertex ``v`` of a graph on ``n`` vertices owns the integer ``rows[v]`` whose
bit ``u`` is set iff ``uv`` is an edge. Python integers are unbounded, so the
same representation serves graphs of any order; the fixed-width fast path of a
machine word simply becomes a longer integer once ``n > 64``.

All operations return new graphs and never mutate their inputs.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Sequence

from .errors import InputError, PreconditionError


def _bits(mask: int):
    """Yield the indices of the set bits of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class Graph:
    """A finite simple undirected graph on vertices ``0 .. n-1``."""

    n: int
    rows: tuple[int, ...]

    def __post_init__(self):
        if self.n < 0:
            raise InputError("vertex count must be nonnegative")
        if len(self.rows) != self.n:
            raise InputError("need exactly one adjacency row per vertex")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.rows):
            if row & ~full:
                raise InputError(f"vertex {v} has a neighbor index >= {self.n}")
            if row >> v & 1:
                raise InputError(f"self-loop at vertex {v}")
            for u in _bits(row):
                if not self.rows[u] >> v & 1:
                    raise InputError(f"adjacency not symmetric between {u} and {v}")

    @classmethod
    def _trusted(cls, n: int, rows: Sequence[int]) -> "Graph":
        # Skips validation; callers guarantee symmetric irreflexive rows.
        g = object.__new__(cls)
        object.__setattr__(g, "n", n)
        object.__setattr__(g, "rows", tuple(rows))
        return g

    # -- basic queries -------------------------------------------------

    @property
    def vertex_count(self) -> int:
        return self.n

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    @property
    def adjacency(self) -> tuple[frozenset[int], ...]:
        return tuple(frozenset(_bits(r)) for r in self.rows)

    def neighbors(self, v: int) -> list[int]:
        return list(_bits(self.rows[v]))

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.rows[u] >> v & 1)

    def degree(self, v: int) -> int:
        return self.rows[v].bit_count()

    def missing_degree(self, v: int) -> int:
        """Degree of ``v`` in the complement."""
        return self.n - 1 - self.rows[v].bit_count()

    def max_missing_degree(self) -> int:
        """Maximum degree of the complement (0 for the empty graph)."""
        return max((self.missing_degree(v) for v in range(self.n)), default=0)

    def edges(self) -> list[tuple[int, int]]:
        """Edges as ``(u, v)`` pairs with ``u < v``, in lexicographic order."""
        return [(u, v) for u in range(self.n) for v in _bits(self.rows[u] >> (u + 1) << (u + 1))]

    @property
    def edge_count(self) -> int:
        return sum(r.bit_count() for r in self.rows) // 2

    def is_clique(self, vertices: Iterable[int]) -> bool:
        mask = 0
        for v in vertices:
            mask |= 1 << v
        return all((self.rows[v] | (1 << v)) & mask == mask for v in _bits(mask))

    def is_connected(self) -> bool:
        if self.n == 0:
            return True
        return component_of(self, 0, self.full_mask) == self.full_mask

    def components(self) -> list[list[int]]:
        """Vertex lists of the connected components, ordered by least vertex."""
        seen = 0
        out = []
        for v in range(self.n):
            if not seen >> v & 1:
                comp = component_of(self, v, self.full_mask)
                seen |= comp
                out.append(list(_bits(comp)))
        return out

    def __repr__(self):
        return f"Graph(n={self.n}, edges={self.edges()})"


def component_of(g: Graph, v: int, allowed: int) -> int:
    """Bitmask of the component of ``v`` in the subgraph induced by ``allowed``."""
    comp = 1 << v
    frontier = comp
    while frontier:
        nxt = 0
        for u in _bits(frontier):
            nxt |= g.rows[u]
        nxt &= allowed & ~comp
        comp |= nxt
        frontier = nxt
    return comp


@dataclass(frozen=True)
class ShapeParams:
    """Complement of a perfect matching on ``2a`` vertices joined to a ``K_b``."""

    a: int
    b: int

    def __post_init__(self):
        if self.a < 0 or self.b < 0:
            raise InputError(f"shape parameters must be nonnegative, got ({self.a}, {self.b})")

    @property
    def order(self) -> int:
        return 2 * self.a + self.b

    @property
    def clique_count(self) -> int:
        return 3 ** self.a * 2 ** self.b


# -- constructors ------------------------------------------------------


def from_edge_list(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    if n < 0:
        raise InputError("vertex count must be nonnegative")
    rows = [0] * n
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise InputError(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
        if u == v:
            raise InputError(f"self-loop at vertex {u}")
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph._trusted(n, rows)


def empty_graph(n: int) -> Graph:
    return Graph._trusted(n, [0] * n)


def complete_graph(n: int) -> Graph:
    full = (1 << n) - 1
    return Graph._trusted(n, [full ^ (1 << v) for v in range(n)])


def path_graph(n: int) -> Graph:
    return from_edge_list(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise InputError("a cycle needs at least 3 vertices")
    return from_edge_list(n, [(i, (i + 1) % n) for i in range(n)])


def star_graph(leaves: int) -> Graph:
    """``K_{1,leaves}`` with the center at vertex 0."""
    return from_edge_list(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def complement_of_matching(shape: ShapeParams) -> Graph:
    """The shape ``K(a, b)``.

    Vertices ``2i`` and ``2i+1`` (``i < a``) are the non-adjacent pairs; the
    last ``b`` vertices are adjacent to everything else.
    """
    n = shape.order
    full = (1 << n) - 1
    rows = []
    for v in range(n):
        row = full ^ (1 << v)
        if v < 2 * shape.a:
            row ^= 1 << (v ^ 1)
        rows.append(row)
    return Graph._trusted(n, rows)


# -- structural operations ---------------------------------------------


def complement(g: Graph) -> Graph:
    full = g.full_mask
    return Graph._trusted(g.n, [full ^ r ^ (1 << v) for v, r in enumerate(g.rows)])


def induced_subgraph(g: Graph, vertices: Iterable[int]) -> tuple[Graph, list[int]]:
    """Subgraph induced by ``vertices``.

    Returns the graph and the list mapping new indices to old ones; the new
    indices follow increasing old index.
    """
    keep = sorted(set(vertices))
    for v in keep:
        if not 0 <= v < g.n:
            raise InputError(f"vertex {v} is not in a graph on {g.n} vertices")
    index = {old: new for new, old in enumerate(keep)}
    rows = []
    for old in keep:
        row = 0
        for u in _bits(g.rows[old]):
            if u in index:
                row |= 1 << index[u]
        rows.append(row)
    return Graph._trusted(len(keep), rows), keep


def contract_edge(g: Graph, u: int, v: int) -> Graph:
    """Contract the edge ``uv``.

    Re-indexing rule: vertex ``v`` is removed and every index above ``v``
    shifts down by one; the merged vertex occupies the slot of ``u`` (after
    that shift). The merged vertex is adjacent to ``N(u) | N(v)`` minus
    ``{u, v}``.
    """
    if not (0 <= u < g.n and 0 <= v < g.n) or u == v or not g.has_edge(u, v):
        raise PreconditionError(f"({u}, {v}) is not an edge")
    merged = (g.rows[u] | g.rows[v]) & ~(1 << u) & ~(1 << v)
    rows = list(g.rows)
    rows[u] = merged
    for w in _bits(merged):
        rows[w] = (rows[w] & ~(1 << v)) | (1 << u)
    rows[v] = None
    low = (1 << v) - 1

    def squeeze(r):
        return (r & low) | ((r >> (v + 1)) << v)

    return Graph._trusted(g.n - 1, [squeeze(r) for r in rows if r is not None])


def delete_vertex(g: Graph, v: int) -> Graph:
    return induced_subgraph(g, [w for w in range(g.n) if w != v])[0]


def disjoint_union(graphs: Sequence[Graph]) -> Graph:
    rows = []
    offset = 0
    for h in graphs:
        rows.extend(r << offset for r in h.rows)
        offset += h.n
    return Graph._trusted(offset, rows)


def relabel(g: Graph, perm: Sequence[int]) -> Graph:
    """Graph whose vertex ``perm[v]`` plays the role of ``v`` in ``g``."""
    return from_edge_list(g.n, [(perm[u], perm[v]) for u, v in g.edges()])


def all_pairs(n: int) -> list[tuple[int, int]]:
    """Unordered vertex pairs in the order used for edge bitmasks."""
    return list(combinations(range(n), 2))
