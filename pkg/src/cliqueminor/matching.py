"""Maximum-cardinality matching in general graphs (Edmonds' blossom algorithm)."""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .graph import Graph, complement


@dataclass(frozen=True)
class Matching:
    edges: frozenset[tuple[int, int]]

    @property
    def size(self) -> int:
        return len(self.edges)

    def is_valid_in(self, g: Graph) -> bool:
        used = set()
        for u, v in self.edges:
            if u in used or v in used or not g.has_edge(u, v):
                return False
            used.update((u, v))
        return True


def maximum_matching(g: Graph) -> Matching:
    n = g.n
    adj = [g.neighbors(v) for v in range(n)]
    match = [-1] * n

    # greedy warm start; augmentation below makes the result exact
    for u in range(n):
        if match[u] == -1:
            for v in adj[u]:
                if match[v] == -1:
                    match[u], match[v] = v, u
                    break

    def find_augmenting(root):
        parent = [-1] * n
        base = list(range(n))
        used = [False] * n
        used[root] = True
        queue = deque([root])

        def lca(a, b):
            seen = [False] * n
            while True:
                a = base[a]
                seen[a] = True
                if match[a] == -1:
                    break
                a = parent[match[a]]
            while True:
                b = base[b]
                if seen[b]:
                    return b
                b = parent[match[b]]

        def mark_path(v, b, child, blossom):
            while base[v] != b:
                blossom[base[v]] = blossom[base[match[v]]] = True
                parent[v] = child
                child = match[v]
                v = parent[match[v]]

        while queue:
            v = queue.popleft()
            for to in adj[v]:
                if base[v] == base[to] or match[v] == to:
                    continue
                if to == root or (match[to] != -1 and parent[match[to]] != -1):
                    cur = lca(v, to)
                    blossom = [False] * n
                    mark_path(v, cur, to, blossom)
                    mark_path(to, cur, v, blossom)
                    for i in range(n):
                        if blossom[base[i]]:
                            base[i] = cur
                            if not used[i]:
                                used[i] = True
                                queue.append(i)
                elif parent[to] == -1:
                    parent[to] = v
                    if match[to] == -1:
                        return to, parent
                    used[match[to]] = True
                    queue.append(match[to])
        return -1, parent

    for root in range(n):
        if match[root] != -1:
            continue
        end, parent = find_augmenting(root)
        v = end
        while v != -1:
            pv = parent[v]
            nxt = match[pv]
            match[v], match[pv] = pv, v
            v = nxt

    edges = frozenset((u, match[u]) for u in range(n) if match[u] > u)
    return Matching(edges)


def missing_matching_size(h: Graph) -> int:
    """Size of a largest matching in the complement of ``h``."""
    return maximum_matching(complement(h)).size
