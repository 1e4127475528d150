"""Euler characteristic of sampled 1-complexes."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Sequence


@dataclass(frozen=True)
class GraphComponent:
    nodes: tuple[int, ...]
    edge_count: int
    simplified_vertices: int
    simplified_edges: int

    @property
    def chi(self) -> int:
        return len(self.nodes) - self.edge_count


def _find(parent: list[int], i: int) -> int:
    while parent[i] != i:
        parent[i] = parent[parent[i]]
        i = parent[i]
    return i


def components(n_nodes: int, edges: Sequence[tuple[int, int]]) -> list[GraphComponent]:
    """Connected components, ordered by smallest node id."""
    parent = list(range(n_nodes))
    for a, b in edges:
        ra, rb = _find(parent, a), _find(parent, b)
        if ra != rb:
            parent[max(ra, rb)] = min(ra, rb)
    groups: dict[int, list[int]] = {}
    for i in range(n_nodes):
        groups.setdefault(_find(parent, i), []).append(i)
    by_root: dict[int, list[tuple[int, int]]] = {r: [] for r in groups}
    for a, b in edges:
        by_root[_find(parent, a)].append((a, b))
    out = []
    for root in sorted(groups):
        v, e = simplify(groups[root], by_root[root])
        out.append(GraphComponent(tuple(groups[root]), len(by_root[root]), v, e))
    return out


def simplify(nodes: Iterable[int], edges: Iterable[tuple[int, int]]) -> tuple[int, int]:
    """Vertex and edge counts after collapsing degree-2 chains.

    Works on the multigraph; V - E is unchanged.  A bare cycle ends as one
    vertex with a loop.
    """
    nodes = set(nodes)
    adj: dict[int, Counter] = {v: Counter() for v in nodes}
    for a, b in edges:
        adj[a][b] += 1
        if a != b:
            adj[b][a] += 1

    def degree(v):
        return sum(adj[v].values()) + adj[v][v]  # a loop counts twice

    changed = True
    while changed:
        changed = False
        for v in sorted(nodes):
            if degree(v) != 2 or adj[v][v]:
                continue
            nbrs = list(adj[v].elements())
            a, b = nbrs
            for u in nbrs:
                adj[u][v] -= 1
                if not adj[u][v]:
                    del adj[u][v]
            del adj[v]
            nodes.discard(v)
            adj[a][b] += 1
            if a != b:
                adj[b][a] += 1
            changed = True
            break
    n_edges = sum(sum(c.values()) + c[v] for v, c in adj.items()) // 2
    return len(nodes), n_edges
