"""Labeled-graph enumeration and vectorised clique tables for exhaustive sweeps.

Graph number ``mask`` on ``n`` vertices has edge ``all_pairs(n)[i]`` iff bit
``i`` of ``mask`` is set, so masks run from the empty graph to ``K_n``.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator

import networkx as nx
import numpy as np

from .errors import GuardError
from .graph import Graph, all_pairs, from_edge_list

ENUMERATION_MAX_VERTICES = 7


def _check(n: int):
    if not 0 <= n <= ENUMERATION_MAX_VERTICES:
        raise GuardError(
            f"labeled enumeration is limited to {ENUMERATION_MAX_VERTICES} vertices, got {n}"
        )


def graph_from_mask(n: int, mask: int, pairs=None) -> Graph:
    pairs = pairs or all_pairs(n)
    rows = [0] * n
    i = 0
    while mask:
        if mask & 1:
            u, v = pairs[i]
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        mask >>= 1
        i += 1
    return Graph._trusted(n, rows)


def graph_to_mask(g: Graph) -> int:
    return sum(1 << i for i, (u, v) in enumerate(all_pairs(g.n)) if g.has_edge(u, v))


def enumerate_labeled_graphs(n: int) -> Iterator[Graph]:
    """All ``2**(n(n-1)/2)`` labeled graphs on ``n`` vertices, in mask order."""
    _check(n)
    pairs = all_pairs(n)
    for mask in range(1 << len(pairs)):
        yield graph_from_mask(n, mask, pairs)


@dataclass(frozen=True)
class CensusTable:
    """Clique data for every labeled graph on ``n`` vertices, indexed by mask."""

    n: int
    total: np.ndarray
    omega: np.ndarray
    containing: np.ndarray  # shape (n, 2**m)

    @property
    def size(self) -> int:
        return len(self.total)


@lru_cache(maxsize=8)
def census_table(n: int) -> CensusTable:
    """Vectorised subset-scan census of all labeled graphs on ``n`` vertices.

    Results are cached and their arrays are read-only.
    """
    _check(n)
    pairs = all_pairs(n)
    masks = np.arange(1 << len(pairs), dtype=np.uint32)
    total = np.zeros(masks.shape, dtype=np.int64)
    omega = np.zeros(masks.shape, dtype=np.int64)
    containing = np.zeros((n, len(masks)), dtype=np.int64)
    for s in range(1 << n):
        need = 0
        for i, (u, v) in enumerate(pairs):
            if s >> u & 1 and s >> v & 1:
                need |= 1 << i
        hit = (masks & np.uint32(need)) == np.uint32(need)
        total += hit
        size = bin(s).count("1")
        if size:
            np.maximum(omega, np.where(hit, size, 0), out=omega)
        for v in range(n):
            if s >> v & 1:
                containing[v] += hit
    for arr in (total, omega, containing):
        arr.setflags(write=False)
    return CensusTable(n, total, omega, containing)


def connected_graphs(max_n: int, min_n: int = 1) -> list[Graph]:
    """One representative per isomorphism class of connected graphs, ``min_n..max_n`` vertices."""
    if max_n > 7:
        raise GuardError("the graph atlas covers at most 7 vertices")
    out = []
    for h in nx.graph_atlas_g():
        k = h.number_of_nodes()
        if min_n <= k <= max_n and nx.is_connected(h):
            out.append(from_edge_list(k, list(h.edges())))
    return out
