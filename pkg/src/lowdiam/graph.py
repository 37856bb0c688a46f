"""Immutable simple undirected graphs and exact hop-distance metrics."""

from __future__ import annotations

from collections import Counter, deque
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional

import numpy as np
from scipy import sparse

UNREACHABLE = -1
ORACLE_CAP = 512
_BLOCK = 512


class GraphError(ValueError):
    """Invalid graph input or a metric requested on an unsuitable graph."""


@dataclass(frozen=True)
class Graph:
    """Vertices are ``0..order-1``; ``adjacency[v]`` is the sorted tuple of neighbors."""

    order: int
    adjacency: tuple[tuple[int, ...], ...]

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adjacency[v]

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._sets()[u]

    def _sets(self) -> tuple[frozenset[int], ...]:
        cached = self.__dict__.get("_adjsets")
        if cached is None:
            cached = tuple(frozenset(a) for a in self.adjacency)
            object.__setattr__(self, "_adjsets", cached)
        return cached

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u, nbrs in enumerate(self.adjacency) for v in nbrs if u < v]

    @property
    def size(self) -> int:
        return sum(len(a) for a in self.adjacency) // 2

    def relabel(self, perm: list[int]) -> Graph:
        """Graph with vertex v renamed to perm[v]."""
        return build_graph(self.order, [(perm[u], perm[v]) for u, v in self.edges()])

    def csr(self) -> sparse.csr_matrix:
        rows = [u for u, nbrs in enumerate(self.adjacency) for _ in nbrs]
        cols = [v for nbrs in self.adjacency for v in nbrs]
        data = np.ones(len(cols), dtype=np.float32)
        return sparse.csr_matrix((data, (rows, cols)), shape=(self.order, self.order))


def build_graph(order: int, edges: Iterable[tuple[int, int]]) -> Graph:
    if order < 1:
        raise GraphError(f"order must be >= 1, got {order}")
    adj: list[set[int]] = [set() for _ in range(order)]
    for u, v in edges:
        if not (0 <= u < order and 0 <= v < order):
            raise GraphError(f"edge ({u}, {v}) has an endpoint outside [0, {order})")
        if u == v:
            raise GraphError(f"self-loop at vertex {u}")
        adj[u].add(v)
        adj[v].add(u)
    return Graph(order, tuple(tuple(sorted(a)) for a in adj))


def bfs_distances(g: Graph, source: int) -> list[int]:
    """Hop counts from ``source``; unreachable vertices get ``UNREACHABLE``."""
    if not 0 <= source < g.order:
        raise GraphError(f"source {source} outside [0, {g.order})")
    dist = [UNREACHABLE] * g.order
    dist[source] = 0
    queue = deque([source])
    adj = g.adjacency
    while queue:
        u = queue.popleft()
        du = dist[u] + 1
        for w in adj[u]:
            if dist[w] == UNREACHABLE:
                dist[w] = du
                queue.append(w)
    return dist


def _block_distances(a: sparse.csr_matrix, sources: np.ndarray, n: int) -> np.ndarray:
    # level-synchronous BFS from a batch of sources at once; column j belongs to sources[j]
    b = len(sources)
    dist = np.full((n, b), UNREACHABLE, dtype=np.int32)
    frontier = np.zeros((n, b), dtype=np.float32)
    frontier[sources, np.arange(b)] = 1.0
    reached = frontier > 0
    dist[reached] = 0
    level = 0
    while True:
        level += 1
        nxt = (a @ frontier > 0) & ~reached
        if not nxt.any():
            return dist.T
        dist[nxt] = level
        reached |= nxt
        frontier = nxt.astype(np.float32)


def distance_rows(g: Graph, block: int = _BLOCK):
    """Yield ``(first_source, rows)`` blocks of the all-pairs distance matrix."""
    a = g.csr()
    for start in range(0, g.order, block):
        sources = np.arange(start, min(start + block, g.order))
        yield start, _block_distances(a, sources, g.order)


def distance_matrix(g: Graph) -> np.ndarray:
    return np.vstack([rows for _, rows in distance_rows(g)])


def diameter(g: Graph) -> Optional[int]:
    """Largest hop distance, or None when the graph is disconnected."""
    if g.order < 2:
        raise GraphError("diameter needs at least 2 vertices")
    best = 0
    for _, rows in distance_rows(g):
        if (rows == UNREACHABLE).any():
            return None
        best = max(best, int(rows.max()))
    return best


def _distance_sum(g: Graph) -> Optional[tuple[int, int]]:
    total = 0
    best = 0
    for _, rows in distance_rows(g):
        if (rows == UNREACHABLE).any():
            return None
        total += int(rows.sum(dtype=np.int64))
        best = max(best, int(rows.max()))
    return total, best


def aspl(g: Graph) -> Fraction:
    if g.order < 2:
        raise GraphError("ASPL needs at least 2 vertices")
    res = _distance_sum(g)
    if res is None:
        raise GraphError("ASPL is undefined on a disconnected graph")
    return Fraction(res[0], g.order * (g.order - 1))


@dataclass(frozen=True)
class DegreeStats:
    min_degree: int
    max_degree: int
    is_regular: bool
    histogram: dict[int, int]


def degree_stats(g: Graph) -> DegreeStats:
    hist = Counter(len(a) for a in g.adjacency)
    lo, hi = min(hist), max(hist)
    return DegreeStats(lo, hi, lo == hi, dict(sorted(hist.items())))


def girth(g: Graph) -> Optional[int]:
    """Shortest cycle length, None for a forest."""
    best = None
    adj = g.adjacency
    for root in range(g.order):
        dist = {root: 0}
        parent = {root: -1}
        queue = deque([root])
        while queue:
            u = queue.popleft()
            if best is not None and 2 * dist[u] + 1 >= best:
                break
            for w in adj[u]:
                if w not in dist:
                    dist[w] = dist[u] + 1
                    parent[w] = u
                    queue.append(w)
                elif parent[u] != w:
                    cyc = dist[u] + dist[w] + 1
                    if best is None or cyc < best:
                        best = cyc
        if best == 3:
            break
    return best


def oracle_all_pairs(g: Graph, cap: int = ORACLE_CAP) -> np.ndarray:
    """Floyd-Warshall relaxation over all vertex triples; independent of BFS."""
    n = g.order
    if n > cap:
        raise GraphError(f"oracle refuses graphs with more than {cap} vertices (got {n})")
    inf = np.iinfo(np.int64).max // 4
    d = np.full((n, n), inf, dtype=np.int64)
    np.fill_diagonal(d, 0)
    for u, v in g.edges():
        d[u, v] = d[v, u] = 1
    for k in range(n):
        np.minimum(d, d[:, k : k + 1] + d[k : k + 1, :], out=d)
    d[d >= inf] = UNREACHABLE
    return d


@dataclass(frozen=True)
class MetricsReport:
    order: int
    min_degree: int
    max_degree: int
    is_regular: bool
    is_connected: bool
    diameter: Optional[int]
    aspl_numerator: Optional[int]
    aspl_denominator: int
    girth: Optional[int]
    degree_histogram: dict[int, int]

    @property
    def aspl(self) -> Optional[Fraction]:
        if self.aspl_numerator is None or self.aspl_denominator == 0:
            return None
        return Fraction(self.aspl_numerator, self.aspl_denominator)


def metrics(g: Graph, with_girth: bool = True) -> MetricsReport:
    ds = degree_stats(g)
    n = g.order
    if n >= 2:
        res = _distance_sum(g)
    else:
        res = (0, 0)
    connected = res is not None
    return MetricsReport(
        order=n,
        min_degree=ds.min_degree,
        max_degree=ds.max_degree,
        is_regular=ds.is_regular,
        is_connected=connected,
        diameter=res[1] if connected and n >= 2 else None,
        aspl_numerator=res[0] if connected and n >= 2 else None,
        aspl_denominator=n * (n - 1),
        girth=girth(g) if with_girth else None,
        degree_histogram=ds.histogram,
    )
