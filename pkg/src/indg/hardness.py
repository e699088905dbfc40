"""Dominating Set to Best Response Interconnection reduction, with brute-force deciders.

The reduction builds a one-player game whose second network *is* the input
graph, with an empty first network and full dependencies.  Benefits and cost
satisfy ``b(3) < b(1) - c < b(2)``, so any action worth at least the
threshold ``k (b(1) - c) + (|V| - k) b(2)`` is (after filling in far nodes)
an edge set onto a dominating set of size at most ``k``.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .best_response import _Deviation
from .errors import CapacityError, PreconditionError
from .game import BenefitFunction, GameInstance, StrategyProfile
from .graph_core import Graph

DEFAULT_COST = 2.0
DEFAULT_BENEFITS = (4.0, 3.0, 1.0)
BRUTE_CAP = 20
ACCEPT_SLACK = 1e-9


@dataclass(frozen=True)
class BriInstance:
    game: GameInstance
    threshold: float
    player: int = 0
    fixed_others: StrategyProfile | None = None

    def others(self) -> StrategyProfile:
        return self.fixed_others if self.fixed_others is not None else StrategyProfile.empty(self.game.n)


def reduce_dominating_set(g_d: Graph, k: int, cost: float = DEFAULT_COST, benefits=DEFAULT_BENEFITS) -> BriInstance:
    """One-player game asking for utility ``>= k (b(1) - c) + (|V| - k) b(2)``."""
    nv = g_d.node_count
    if not 1 <= k <= nv:
        raise PreconditionError(f"k must lie in 1..{nv}, got {k}")
    b = BenefitFunction(benefits)
    if not (b(3) < b(1) - cost < b(2)):
        raise PreconditionError(f"constants must satisfy b(3) < b(1) - c < b(2); got b={b.table}, c={cost}")
    game = GameInstance.build(Graph(1), g_d, [cost], [b])
    threshold = k * (b(1) - cost) + (nv - k) * b(2)
    return BriInstance(game, threshold)


def decide_bri_brute(inst: BriInstance, cap: int = BRUTE_CAP) -> bool:
    """Does some action of the player reach the threshold?  Checks all ``2^m`` actions."""
    m = inst.game.m
    if m > cap:
        raise CapacityError(f"BRI brute force limited to {cap} second-network nodes, got {m}")
    dev = _Deviation(inst.game, inst.others(), inst.player)
    target = inst.threshold - ACCEPT_SLACK
    for size in range(m + 1):
        for action in combinations(range(m), size):
            if dev(action) >= target:
                return True
    return False


def decide_dominating_set_brute(g: Graph, k: int, cap: int = BRUTE_CAP) -> bool:
    """Is there a dominating set of size at most ``k``?  Exhaustive over subsets."""
    n = g.node_count
    if n > cap:
        raise CapacityError(f"dominating-set brute force limited to {cap} nodes, got {n}")
    closed = [(1 << v) | sum(1 << w for w in g.neighbors(v)) for v in range(n)]
    full = (1 << n) - 1
    for size in range(min(k, n) + 1):
        for subset in combinations(range(n), size):
            covered = 0
            for v in subset:
                covered |= closed[v]
            if covered == full:
                return True
    return False


def verify_reduction(g_d: Graph, k: int) -> bool:
    """Both deciders agree on ``(g_d, k)`` and its reduced instance."""
    return decide_dominating_set_brute(g_d, k) == decide_bri_brute(reduce_dominating_set(g_d, k))
