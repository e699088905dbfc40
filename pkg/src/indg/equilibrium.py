"""Constructive pure Nash equilibrium for star second networks with complete dependencies.

The construction settles players in this order:

1. low-cost players wire to every second-network node;
2. players whose r-radius is infinite stay empty (no edge ever pays off);
3. high-cost players with a low-cost player within their L-radius free ride;
4. of the rest, the one with the smallest r-radius (then lowest index) takes
   a single edge to the hub, and every undecided player that has this new
   builder inside its own r-radius is emptied; repeat until none remain.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field

from .best_response import require_star
from .errors import PreconditionError
from .game import CostClass, GameInstance, StrategyProfile, classify, l_radius, r_radius
from .graph_core import INFINITE, UNREACHABLE, multi_source_bfs


@dataclass(frozen=True)
class EquilibriumTrace:
    s_low: tuple[int, ...]
    s_h_inf: tuple[int, ...]
    s_h_l: dict  # free rider -> low-cost player within its L-radius
    builders: tuple[int, ...]
    suppressed: dict  # free rider -> builder inside its r-radius
    hub: int
    l_radii: dict = field(default_factory=dict)
    r_radii: dict = field(default_factory=dict)

    @property
    def order(self) -> list[int]:
        """Decision order of the construction (usable as a best-response schedule)."""
        seq = list(self.s_low) + list(self.s_h_inf) + sorted(self.s_h_l)
        by_builder: dict[int, list[int]] = {b: [] for b in self.builders}
        for j, b in sorted(self.suppressed.items()):
            by_builder[b].append(j)
        for b in self.builders:
            seq.append(b)
            seq.extend(by_builder[b])
        return seq

    def to_dict(self):
        def radius(v):
            return "inf" if v == INFINITE else v

        return {
            "hub": self.hub,
            "low_cost": list(self.s_low),
            "infinite_radius": list(self.s_h_inf),
            "near_low_cost": {str(k): v for k, v in sorted(self.s_h_l.items())},
            "builders": list(self.builders),
            "suppressed": {str(k): v for k, v in sorted(self.suppressed.items())},
            "l_radius": {str(k): radius(v) for k, v in sorted(self.l_radii.items())},
            "r_radius": {str(k): radius(v) for k, v in sorted(self.r_radii.items())},
        }


def _nearest_labelled(adj, sources):
    """Multi-source BFS returning ``(distance, nearest source)`` per node."""
    dist = [UNREACHABLE] * len(adj)
    label = [None] * len(adj)
    queue = deque()
    for s in sorted(sources):
        dist[s], label[s] = 0, s
        queue.append(s)
    while queue:
        u = queue.popleft()
        for w in adj[u]:
            if dist[w] == UNREACHABLE:
                dist[w], label[w] = dist[u] + 1, label[u]
                queue.append(w)
    return dist, label


def star_nash_equilibrium(inst: GameInstance, hub=None) -> tuple[StrategyProfile, EquilibriumTrace]:
    """Build one pure Nash equilibrium; raises :class:`PreconditionError` without a hub or full dependencies."""
    hub = require_star(inst, hub)
    n, m = inst.n, inst.m
    adj = inst.g1.adjacency

    low = [i for i, p in enumerate(inst.players) if classify(p) is CostClass.LOW]
    low_set = set(low)
    high = [i for i in range(n) if i not in low_set]
    L = {i: l_radius(inst.players[i], m) for i in high}
    r = {i: r_radius(inst.players[i], m) for i in high}

    s_h_inf = [i for i in high if r[i] == INFINITE]
    low_dist, low_label = _nearest_labelled(adj, low)
    s_h_l = {i: low_label[i] for i in high if r[i] != INFINITE and low_dist[i] <= L[i]}

    queue = sorted((i for i in high if r[i] != INFINITE and i not in s_h_l), key=lambda i: (r[i], i))
    pending = set(queue)
    builders, suppressed = [], {}
    for i in queue:
        if i not in pending:
            continue
        pending.discard(i)
        builders.append(i)
        if not pending:
            break
        reach = max(r[j] for j in pending)
        dist = multi_source_bfs(adj, [i], limit=int(reach))
        for j in sorted(pending):
            if dist[j] <= r[j]:
                suppressed[j] = i
                pending.discard(j)

    actions = [frozenset()] * n
    for i in low:
        actions[i] = frozenset(range(m))
    for i in builders:
        actions[i] = frozenset([hub])
    trace = EquilibriumTrace(
        s_low=tuple(low),
        s_h_inf=tuple(s_h_inf),
        s_h_l=s_h_l,
        builders=tuple(builders),
        suppressed=suppressed,
        hub=hub,
        l_radii=L,
        r_radii=r,
    )
    return StrategyProfile(actions), trace


@dataclass(frozen=True)
class PlayerStatus:
    kind: str  # "builder", "full_wiring", "free_rider" or "abstain"
    via: int | None = None

    def __str__(self):
        return f"{self.kind}({self.via})" if self.via is not None else self.kind


BUILDER = "builder"
FULL_WIRING = "full_wiring"
FREE_RIDER = "free_rider"
ABSTAIN = "abstain"


def free_rider_report(trace: EquilibriumTrace) -> dict[int, PlayerStatus]:
    """Label every player by the rule that fixed its action."""
    out = {}
    for i in trace.s_low:
        out[i] = PlayerStatus(FULL_WIRING)
    for i in trace.s_h_inf:
        out[i] = PlayerStatus(ABSTAIN)
    for i, via in trace.s_h_l.items():
        out[i] = PlayerStatus(FREE_RIDER, via)
    for i in trace.builders:
        out[i] = PlayerStatus(BUILDER)
    for i, via in trace.suppressed.items():
        out[i] = PlayerStatus(FREE_RIDER, via)
    if len(out) != len(trace.s_low) + len(trace.s_h_inf) + len(trace.s_h_l) + len(trace.builders) + len(trace.suppressed):
        raise PreconditionError("trace sets overlap")
    return dict(sorted(out.items()))
