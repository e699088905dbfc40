"""Undirected simple graphs, BFS distances, diameter, hubs and dominating sets.

Nodes are the integers ``0 .. n-1``.  Unreachable distances are reported as
:data:`UNREACHABLE` (``math.inf``), never as a large finite number.
"""

from __future__ import annotations

import math
from collections import deque
from itertools import combinations
from typing import Iterable, NamedTuple

import numpy as np
from scipy import sparse
from scipy.sparse import csgraph

from .errors import CapacityError, PreconditionError

UNREACHABLE = math.inf
INFINITE = math.inf

EXACT_DOMINATING_SET_CAP = 30


class Graph:
    """Immutable undirected simple graph with sorted adjacency lists."""

    __slots__ = ("_n", "_adj", "_m")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise PreconditionError(f"node count must be nonnegative, got {n}")
        nbrs: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            u, v = int(u), int(v)
            if not (0 <= u < n and 0 <= v < n):
                raise PreconditionError(f"edge ({u}, {v}) out of range for {n} nodes")
            if u == v:
                raise PreconditionError(f"self-loop at node {u}")
            nbrs[u].add(v)
            nbrs[v].add(u)
        self._n = n
        self._adj = tuple(tuple(sorted(s)) for s in nbrs)
        self._m = sum(len(s) for s in nbrs) // 2

    @classmethod
    def from_adjacency(cls, adj) -> "Graph":
        g = cls.__new__(cls)
        g._n = len(adj)
        g._adj = tuple(tuple(sorted(a)) for a in adj)
        g._m = sum(len(a) for a in g._adj) // 2
        return g

    @classmethod
    def complete(cls, n: int) -> "Graph":
        return cls(n, combinations(range(n), 2))

    @classmethod
    def path(cls, n: int) -> "Graph":
        return cls(n, ((i, i + 1) for i in range(n - 1)))

    @classmethod
    def cycle(cls, n: int) -> "Graph":
        if n < 3:
            raise PreconditionError("a cycle needs at least 3 nodes")
        return cls(n, ((i, (i + 1) % n) for i in range(n)))

    @classmethod
    def star(cls, n: int, center: int = 0) -> "Graph":
        return cls(n, ((center, v) for v in range(n) if v != center))

    @property
    def node_count(self) -> int:
        return self._n

    @property
    def edge_count(self) -> int:
        return self._m

    @property
    def adjacency(self) -> tuple[tuple[int, ...], ...]:
        return self._adj

    def __len__(self):
        return self._n

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self._adj[v]

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._adj[u]

    def edges(self) -> list[tuple[int, int]]:
        """Sorted list of ``(u, v)`` with ``u < v``."""
        return [(u, v) for u in range(self._n) for v in self._adj[u] if u < v]

    def with_edges(self, extra: Iterable[tuple[int, int]]) -> "Graph":
        return Graph(self._n, list(self.edges()) + list(extra))

    def to_csr(self) -> sparse.csr_matrix:
        edges = self.edges()
        if not edges:
            return sparse.csr_matrix((self._n, self._n), dtype=np.int8)
        e = np.asarray(edges, dtype=np.int64)
        rows = np.concatenate([e[:, 0], e[:, 1]])
        cols = np.concatenate([e[:, 1], e[:, 0]])
        data = np.ones(len(rows), dtype=np.int8)
        return sparse.csr_matrix((data, (rows, cols)), shape=(self._n, self._n))

    def __eq__(self, other):
        return isinstance(other, Graph) and self._adj == other._adj

    def __hash__(self):
        return hash(self._adj)

    def __repr__(self):
        return f"Graph(n={self._n}, edges={self._m})"


def _check_node(g: Graph, v: int) -> None:
    if not (0 <= v < g.node_count):
        raise PreconditionError(f"node {v} not in graph with {g.node_count} nodes")


def bfs_distances(g: Graph, source: int) -> list[float]:
    """Hop distances from ``source``; ``UNREACHABLE`` where no path exists."""
    _check_node(g, source)
    return multi_source_bfs(g.adjacency, [source])


def multi_source_bfs(adj, sources, limit=None) -> list[float]:
    """Distance from each node to the nearest of ``sources``.

    ``adj`` is any sequence of neighbor sequences.  With ``limit`` the search
    stops expanding past that depth; farther nodes stay ``UNREACHABLE``.
    """
    dist = [UNREACHABLE] * len(adj)
    queue = deque()
    for s in sources:
        if dist[s] != 0:
            dist[s] = 0
            queue.append(s)
    while queue:
        u = queue.popleft()
        du = dist[u]
        if limit is not None and du >= limit:
            continue
        for w in adj[u]:
            if dist[w] == UNREACHABLE:
                dist[w] = du + 1
                queue.append(w)
    return dist


def two_nearest_sources(adj, sources) -> tuple[list[float], list[float]]:
    """Distances to the nearest and second-nearest distinct sources, per node.

    For a source node the first entry is 0 and the second is the distance to
    the closest *other* source.
    """
    n = len(adj)
    labels: list[list[int]] = [[] for _ in range(n)]
    first = [UNREACHABLE] * n
    second = [UNREACHABLE] * n
    queue = deque()
    for s in sorted(set(sources)):
        labels[s].append(s)
        first[s] = 0
        queue.append((s, s, 0))
    while queue:
        u, src, d = queue.popleft()
        for w in adj[u]:
            lw = labels[w]
            if len(lw) >= 2 or src in lw:
                continue
            lw.append(src)
            if len(lw) == 1:
                first[w] = d + 1
            else:
                second[w] = d + 1
            queue.append((w, src, d + 1))
    return first, second


def all_pairs_distances(g: Graph) -> np.ndarray:
    """Dense hop-distance matrix (``inf`` for unreachable), via scipy's BFS."""
    if g.node_count == 0:
        return np.zeros((0, 0))
    return csgraph.shortest_path(g.to_csr(), method="D", unweighted=True, directed=False)


def diameter(g: Graph) -> float:
    """Largest distance over distinct pairs, ``INFINITE`` if disconnected."""
    if g.node_count < 2:
        raise PreconditionError("diameter needs at least 2 nodes")
    ncomp, _ = csgraph.connected_components(g.to_csr(), directed=False)
    if ncomp > 1:
        return INFINITE
    return int(all_pairs_distances(g).max())


def find_hub(g: Graph) -> int | None:
    """Lowest-index node adjacent to every other node, or ``None``."""
    n = g.node_count
    for v in range(n):
        if g.degree(v) == n - 1:
            return v
    return None


def is_dominating_set(g: Graph, nodes: Iterable[int]) -> bool:
    covered = set()
    for v in nodes:
        covered.add(v)
        covered.update(g.neighbors(v))
    return len(covered) == g.node_count


class DominatingSet(NamedTuple):
    nodes: frozenset
    optimal: bool  # False: greedy result, only an upper bound on the minimum size


def min_dominating_set(g: Graph, mode: str = "exact", cap: int = EXACT_DOMINATING_SET_CAP) -> DominatingSet:
    """Minimum dominating set (``mode="exact"``) or the max-coverage greedy one.

    The exact solver branches on the lowest-index undominated node ``u``: some
    node of its closed neighborhood must be chosen, tried in index order.  A
    counting bound (each pick covers at most ``maxdeg + 1`` nodes) prunes.
    """
    mode = mode.lower()
    if mode == "greedy":
        return DominatingSet(frozenset(_greedy_dominating_set(g)), False)
    if mode != "exact":
        raise PreconditionError(f"unknown dominating-set mode {mode!r}")
    if g.node_count > cap:
        raise CapacityError(f"exact dominating set limited to {cap} nodes, graph has {g.node_count}")
    return DominatingSet(frozenset(_exact_dominating_set(g)), True)


def _greedy_dominating_set(g: Graph) -> list[int]:
    n = g.node_count
    closed = [(v,) + g.neighbors(v) for v in range(n)]
    undominated = set(range(n))
    chosen = []
    while undominated:
        best, gain = -1, -1
        for v in range(n):
            c = sum(1 for w in closed[v] if w in undominated)
            if c > gain:
                best, gain = v, c
        chosen.append(best)
        undominated.difference_update(closed[best])
    return sorted(chosen)


def _exact_dominating_set(g: Graph) -> list[int]:
    n = g.node_count
    if n == 0:
        return []
    closed = [1 << v for v in range(n)]
    for v in range(n):
        for w in g.neighbors(v):
            closed[v] |= 1 << w
    full = (1 << n) - 1
    span = max(g.degree(v) for v in range(n)) + 1

    best = _greedy_dominating_set(g)
    best_size = len(best)

    def search(covered: int, chosen: list[int]):
        nonlocal best, best_size
        if covered == full:
            if len(chosen) < best_size:
                best, best_size = sorted(chosen), len(chosen)
            return
        missing = n - bin(covered).count("1")
        if len(chosen) + -(-missing // span) >= best_size:
            return
        u = ((~covered) & full & -((~covered) & full)).bit_length() - 1
        for v in (u,) + g.neighbors(u):
            if covered | closed[v] == covered:
                continue
            chosen.append(v)
            search(covered | closed[v], chosen)
            chosen.pop()

    search(0, [])
    return best
