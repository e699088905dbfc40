"""Seeded random graph families and cost samplers for the simulation study.

Randomness comes from numpy's ``PCG64`` bit generator.  Seeds may be an
integer, a :class:`numpy.random.SeedSequence` or an existing
:class:`numpy.random.Generator`; the same seed and parameters always produce
the same edge list.
"""

from __future__ import annotations

from itertools import combinations

import numpy as np
from scipy.spatial import cKDTree

from .errors import PreconditionError
from .graph_core import Graph


def make_rng(seed) -> np.random.Generator:
    if isinstance(seed, np.random.Generator):
        return seed
    return np.random.Generator(np.random.PCG64(seed))


def preferential_attachment(n: int, init_nodes: int, edges_per_node: int, seed=None) -> Graph:
    """Barabási–Albert growth from a complete seed graph.

    Each new node links to ``edges_per_node`` distinct existing nodes drawn
    with probability proportional to degree; a repeated draw is discarded and
    redrawn.  While fewer than ``edges_per_node`` nodes exist, a new node links
    to all of them.
    """
    k = edges_per_node
    if not (init_nodes >= 1 and k >= 1 and n >= init_nodes):
        raise PreconditionError(
            f"need init_nodes >= 1, edges_per_node >= 1 and n >= init_nodes, got n={n}, init={init_nodes}, k={k}"
        )
    rng = make_rng(seed)
    edges = list(combinations(range(init_nodes), 2))
    # every edge endpoint appears once per incident edge: uniform draws are degree-proportional
    ends = [v for e in edges for v in e]
    for new in range(init_nodes, n):
        targets: list[int] = []
        want = min(k, new)
        while len(targets) < want:
            if ends:
                t = ends[int(rng.integers(len(ends)))]
            else:
                t = int(rng.integers(new))
            if t not in targets:
                targets.append(t)
        for t in targets:
            edges.append((t, new))
            ends.extend((t, new))
    return Graph(n, edges)


def erdos_renyi(n: int, p: float, seed=None) -> Graph:
    """Each of the ``n(n-1)/2`` pairs present independently with probability ``p``."""
    if not 0 <= p <= 1:
        raise PreconditionError(f"edge probability must be in [0, 1], got {p}")
    rng = make_rng(seed)
    iu, ju = np.triu_indices(n, k=1)
    keep = rng.random(iu.size) < p
    return Graph(n, zip(iu[keep].tolist(), ju[keep].tolist()))


def geometric_random(n: int, side: float, radius: float, seed=None) -> Graph:
    """Uniform points in a ``side x side`` square, linked when at Euclidean distance ``<= radius``."""
    if not (side > 0 and radius > 0):
        raise PreconditionError("side and radius must be positive")
    rng = make_rng(seed)
    pts = rng.uniform(0.0, side, size=(n, 2))
    pairs = cKDTree(pts).query_pairs(radius, output_type="ndarray")
    return Graph(n, map(tuple, pairs.tolist()))


def add_hub(g: Graph, hub: int = 0) -> Graph:
    """Join ``hub`` to every other node."""
    if not 0 <= hub < g.node_count:
        raise PreconditionError(f"hub {hub} not in graph with {g.node_count} nodes")
    adj = [list(a) for a in g.adjacency]
    have = set(adj[hub])
    for v in range(g.node_count):
        if v != hub and v not in have:
            adj[hub].append(v)
            adj[v].append(hub)
    return Graph.from_adjacency(adj)


def sample_costs(n: int, low: float, high: float, seed=None) -> np.ndarray:
    """``n`` i.i.d. Uniform[low, high] edge costs."""
    if not 0 < low < high:
        raise PreconditionError(f"need 0 < low < high, got low={low}, high={high}")
    return make_rng(seed).uniform(low, high, size=n)


def constant_costs(n: int, value: float) -> np.ndarray:
    if not value > 0:
        raise PreconditionError(f"edge cost must be positive, got {value}")
    return np.full(n, float(value))
