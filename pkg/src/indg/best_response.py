"""Best responses, equilibrium checks, best-response dynamics and path disjointness.

Two search routes are provided:

* :func:`brute_force_best_response` enumerates actions up to a size cap that
  is tightened by the structural lemmas (edge count at most ``|I_i|``; full
  wiring for cheap players; at most ``|D|`` edges for expensive players with
  full dependencies; nothing at all above the cost threshold).
* :func:`star_best_response` applies only when the second network has a hub
  and dependencies are complete, where two candidate actions suffice.

:func:`best_response_set` is the unpruned oracle used to test both.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from itertools import combinations
from math import comb

from .errors import CapacityError, PreconditionError
from .game import (
    CostClass,
    GameInstance,
    approx_le,
    check_profile,
    classify,
    combined_adjacency,
    big_r_radius,
    strictly_greater,
)
from .graph_core import (
    EXACT_DOMINATING_SET_CAP,
    UNREACHABLE,
    bfs_distances,
    find_hub,
    min_dominating_set,
    multi_source_bfs,
    two_nearest_sources,
)

DEFAULT_BUDGET = 2**20

LEMMA1_CAP = "Lemma1Cap"
LEMMA2_LOW_COST = "Lemma2LowCost"
LEMMA3_DOM_CAP = "Lemma3DomCap"
LEMMA4_EMPTY = "Lemma4Empty"
COR2_STAR_PAIR = "Cor2StarPair"


@dataclass(frozen=True)
class BestResponseResult:
    action: frozenset
    utility: float
    pruning_trace: tuple[str, ...] = ()

    def to_dict(self):
        return {"action": sorted(self.action), "utility": self.utility, "pruning_trace": list(self.pruning_trace)}


class _Deviation:
    """Evaluates player ``i``'s utility for candidate actions, others held fixed."""

    def __init__(self, inst: GameInstance, profile, i: int):
        if not 0 <= i < inst.n:
            raise PreconditionError(f"no player {i}")
        others = profile.replace(i, ())
        self.adj = combined_adjacency(inst, others)
        self.n = inst.n
        self.i = i
        self.player = inst.players[i]
        self.deps = sorted(self.player.dependencies)

    def __call__(self, action) -> float:
        p = self.player
        if not self.deps:
            return -p.cost * len(action)
        n, adj = self.n, self.adj
        dist = [UNREACHABLE] * len(adj)
        dist[self.i] = 0
        queue = deque()
        for w in adj[self.i]:
            dist[w] = 1
            queue.append(w)
        for y in action:
            if dist[n + y] != 1:
                dist[n + y] = 1
                queue.append(n + y)
        while queue:
            u = queue.popleft()
            du = dist[u] + 1
            for w in adj[u]:
                if dist[w] == UNREACHABLE:
                    dist[w] = du
                    queue.append(w)
        b = p.benefit
        return sum(b(dist[n + y]) for y in self.deps) - p.cost * len(action)


def _candidate_count(m: int, cap: int) -> int:
    return sum(comb(m, s) for s in range(cap + 1))


def brute_force_best_response(
    inst: GameInstance,
    profile,
    i: int,
    budget: int = DEFAULT_BUDGET,
    dominating_cap: int = EXACT_DOMINATING_SET_CAP,
) -> BestResponseResult:
    """Exact best response of player ``i`` by lemma-pruned enumeration.

    Returns the maximum-utility action; ties go to the fewest edges, then the
    lexicographically smallest sorted target list.
    """
    profile = check_profile(inst, profile)
    dev = _Deviation(inst, profile, i)
    p = inst.players[i]
    b, c, m = p.benefit, p.cost, inst.m
    deps = frozenset(p.dependencies)
    trace = [LEMMA1_CAP]

    if strictly_greater(b(1) - b(2), c):
        return BestResponseResult(deps, dev(deps), (LEMMA1_CAP, LEMMA2_LOW_COST))
    if c > b(1) + (len(deps) - 1) * b(2):
        return BestResponseResult(frozenset(), dev(frozenset()), (LEMMA1_CAP, LEMMA4_EMPTY))

    cap = len(deps)
    # The dominating-set cap needs the player to depend on every second-network node.
    if classify(p) is CostClass.HIGH and len(deps) == m and m <= dominating_cap:
        dom = len(min_dominating_set(inst.g2, "exact", cap=dominating_cap).nodes)
        if dom < cap:
            cap = dom
            trace.append(LEMMA3_DOM_CAP)

    total = _candidate_count(m, cap)
    if total > budget:
        raise CapacityError(
            f"best response for player {i} needs {total} candidates (subsets of {m} nodes up to size {cap}), budget {budget}"
        )
    best, best_u = frozenset(), dev(frozenset())
    for size in range(1, cap + 1):
        for targets in combinations(range(m), size):
            u = dev(targets)
            if strictly_greater(u, best_u):
                best, best_u = frozenset(targets), u
    return BestResponseResult(best, best_u, tuple(trace))


def best_response_set(inst: GameInstance, profile, i: int, budget: int = DEFAULT_BUDGET):
    """Unpruned oracle: ``(max utility, all maximizing actions)`` over all ``2^m`` actions."""
    profile = check_profile(inst, profile)
    m = inst.m
    if 2**m > budget:
        raise CapacityError(f"exhaustive best response over 2^{m} actions exceeds budget {budget}")
    dev = _Deviation(inst, profile, i)
    scored = []
    for size in range(m + 1):
        for targets in combinations(range(m), size):
            scored.append((frozenset(targets), dev(targets)))
    top = max(u for _, u in scored)
    winners = [a for a, u in scored if approx_le(top, u)]
    return top, winners


def require_star(inst: GameInstance, hub=None) -> int:
    """Validate the hub/complete-dependency preconditions and return the hub."""
    g2 = inst.g2
    if hub is None:
        hub = find_hub(g2)
        if hub is None:
            raise PreconditionError("second network has no hub (no node adjacent to all others)")
    elif not (0 <= hub < g2.node_count) or g2.degree(hub) != g2.node_count - 1:
        raise PreconditionError(f"y{hub} is not a hub of the second network")
    if not inst.complete_dependencies:
        raise PreconditionError("dependency network is not complete bipartite")
    return hub


class StarEvaluator:
    """Closed-form utilities on star instances for profiles built from coarse actions.

    With a hub in the second network, every dependency is within two hops of
    any interconnection endpoint, so when each action is empty, the hub edge,
    or all of the second network, a player's distances are determined by how
    far (in the first network) the nearest *other* hub-wired and fully-wired
    players are.  Two multi-source BFS passes on the first network then give
    every player's utility for each of its three coarse actions.
    """

    EMPTY, HUB, FULL = "empty", "hub", "full"

    def __init__(self, inst: GameInstance, profile, hub: int):
        self.inst = inst
        self.hub = hub
        m = inst.m
        kinds = []
        for i, a in enumerate(profile):
            if not a:
                kinds.append(self.EMPTY)
            elif len(a) == m:
                kinds.append(self.FULL)
            elif a == {hub}:
                kinds.append(self.HUB)
            else:
                raise PreconditionError(f"action of player {i} is not empty, hub-only or full")
        self.kinds = kinds
        adj = inst.g1.adjacency
        hubbed = [i for i, k in enumerate(kinds) if k != self.EMPTY]
        full = [i for i, k in enumerate(kinds) if k == self.FULL]
        h1, h2 = two_nearest_sources(adj, hubbed)
        f1, f2 = two_nearest_sources(adj, full)
        self.h_other = [h2[i] if kinds[i] != self.EMPTY else h1[i] for i in range(inst.n)]
        self.f_other = [f2[i] if kinds[i] == self.FULL else f1[i] for i in range(inst.n)]

    @classmethod
    def coarse(cls, profile, hub: int, m: int) -> bool:
        return all(not a or len(a) == m or a == {hub} for a in profile)

    def distances(self, i: int, kind: str | None = None):
        """``(distance to hub, distance to each other second-network node)``."""
        kind = kind or self.kinds[i]
        if kind == self.FULL:
            return 1, 1
        a = self.f_other[i]
        if kind == self.HUB:
            return 1, min(a + 1, 2)
        h = self.h_other[i]
        return h + 1, min(a + 1, h + 2)

    def utility(self, i: int, kind: str | None = None) -> float:
        kind = kind or self.kinds[i]
        p = self.inst.players[i]
        m = self.inst.m
        d_hub, d_rest = self.distances(i, kind)
        edges = {self.EMPTY: 0, self.HUB: 1, self.FULL: m}[kind]
        return p.benefit(d_hub) + (m - 1) * p.benefit(d_rest) - p.cost * edges

    def action(self, kind: str) -> frozenset:
        if kind == self.EMPTY:
            return frozenset()
        if kind == self.HUB:
            return frozenset([self.hub])
        return frozenset(range(self.inst.m))


def star_best_response(inst: GameInstance, profile, i: int, hub=None) -> BestResponseResult:
    """Best response on a star instance: full wiring if cheap, else empty vs. hub edge."""
    profile = check_profile(inst, profile)
    hub = require_star(inst, hub)
    p = inst.players[i] if 0 <= i < inst.n else None
    if p is None:
        raise PreconditionError(f"no player {i}")
    m = inst.m
    full = frozenset(range(m))
    if StarEvaluator.coarse(profile, hub, m):
        ev = StarEvaluator(inst, profile, hub)
        evaluate = lambda action: ev.utility(i, _kind_of(action, hub, m))  # noqa: E731
    else:
        evaluate = _Deviation(inst, profile, i)
    if classify(p) is CostClass.LOW:
        return BestResponseResult(full, evaluate(full), (LEMMA2_LOW_COST,))
    empty, single = frozenset(), frozenset([hub])
    u_empty, u_hub = evaluate(empty), evaluate(single)
    if strictly_greater(u_hub, u_empty):
        return BestResponseResult(single, u_hub, (COR2_STAR_PAIR,))
    return BestResponseResult(empty, u_empty, (COR2_STAR_PAIR,))


def _kind_of(action, hub, m):
    if not action:
        return StarEvaluator.EMPTY
    if len(action) == m:
        return StarEvaluator.FULL
    return StarEvaluator.HUB


@dataclass(frozen=True)
class NashCheck:
    is_equilibrium: bool
    player: int | None = None
    better_action: frozenset | None = None
    gain: float = 0.0

    def __bool__(self):
        return self.is_equilibrium


BRUTE_FORCE = "brute_force"
STAR = "star"


def _mode(mode: str) -> str:
    key = mode.lower().replace("-", "_")
    if key in ("brute_force", "bruteforce", "brute"):
        return BRUTE_FORCE
    if key in ("star", "star_restricted", "starrestricted"):
        return STAR
    raise PreconditionError(f"unknown mode {mode!r}")


def is_nash_equilibrium(inst: GameInstance, profile, mode: str = BRUTE_FORCE, budget: int = DEFAULT_BUDGET) -> NashCheck:
    """Whether no player can strictly improve; otherwise the first such player and a better action."""
    profile = check_profile(inst, profile)
    mode = _mode(mode)
    if mode == STAR:
        return _star_nash_check(inst, profile)
    for i in range(inst.n):
        current = _Deviation(inst, profile, i)(profile[i])
        br = brute_force_best_response(inst, profile, i, budget=budget)
        if strictly_greater(br.utility, current):
            return NashCheck(False, i, br.action, br.utility - current)
    return NashCheck(True)


def _star_nash_check(inst, profile) -> NashCheck:
    hub = require_star(inst)
    m = inst.m
    if not StarEvaluator.coarse(profile, hub, m):
        for i in range(inst.n):
            current = _Deviation(inst, profile, i)(profile[i])
            br = star_best_response(inst, profile, i, hub)
            if strictly_greater(br.utility, current):
                return NashCheck(False, i, br.action, br.utility - current)
        return NashCheck(True)
    ev = StarEvaluator(inst, profile, hub)
    for i, p in enumerate(inst.players):
        current = ev.utility(i)
        if classify(p) is CostClass.LOW:
            options = [StarEvaluator.FULL]
        else:
            options = [StarEvaluator.EMPTY, StarEvaluator.HUB]
        for kind in options:
            u = ev.utility(i, kind)
            if strictly_greater(u, current):
                return NashCheck(False, i, ev.action(kind), u - current)
    return NashCheck(True)


def sequential_brd(inst: GameInstance, start, order=None, max_rounds: int = 100, mode: str = BRUTE_FORCE, budget: int = DEFAULT_BUDGET):
    """Sequential best-response dynamics.

    Players move in ``order`` (default: by index).  A player switches to its
    best response only when that strictly beats its current action, so an
    equilibrium is a fixed point.  Returns ``(profile, converged, rounds)``;
    ``converged`` means the last round changed nothing.
    """
    profile = check_profile(inst, start)
    mode = _mode(mode)
    order = list(range(inst.n)) if order is None else list(order)
    hub = require_star(inst) if mode == STAR else None
    for rnd in range(1, max_rounds + 1):
        changed = False
        for i in order:
            current = _Deviation(inst, profile, i)(profile[i])
            if mode == STAR:
                br = star_best_response(inst, profile, i, hub)
            else:
                br = brute_force_best_response(inst, profile, i, budget=budget)
            if strictly_greater(br.utility, current):
                profile = profile.replace(i, br.action)
                changed = True
        if not changed:
            return profile, True, rnd
    return profile, False, max_rounds


def _shortest_path_dag_g1(adj, dist, target, n):
    """First-network nodes strictly inside at least one shortest path from the BFS source to ``target``."""
    seen = {target}
    stack = [target]
    while stack:
        w = stack.pop()
        dw = dist[w]
        for u in adj[w]:
            if u not in seen and dist[u] == dw - 1:
                seen.add(u)
                stack.append(u)
    return frozenset(v for v in seen if v < n and dist[v] > 0)


def _g1_path_sets(adj, dist, target, n, budget):
    """Distinct sets of interior first-network nodes, one per shortest path to ``target``."""
    out = set()
    count = 0

    def walk(w, acc):
        nonlocal count
        if dist[w] == 0:
            count += 1
            if count > budget:
                raise CapacityError(f"more than {budget} shortest paths to enumerate")
            out.add(acc)
            return
        nxt = acc | {w} if w < n else acc
        for u in adj[w]:
            if dist[u] == dist[w] - 1:
                walk(u, nxt)

    walk(target, frozenset())
    return out


def check_disjoint_shortest_paths(inst: GameInstance, profile, i: int, j: int, strict: bool = False, path_budget: int = 100_000) -> bool:
    """Whether the two players' shortest paths to their dependencies can avoid each other in the first network.

    Only interior nodes count: a path's own start ``x_i`` is not "used", but a
    path that relays through ``x_j`` uses it.  Default reading: some choice of
    one shortest path per (player, dependency) makes the interior node sets of
    the two players disjoint.  With ``strict=True`` every shortest path of one
    player must avoid every shortest path of the other.
    """
    profile = check_profile(inst, profile)
    for k in (i, j):
        if not 0 <= k < inst.n:
            raise PreconditionError(f"no player {k}")
        if not inst.players[k].dependencies:
            raise PreconditionError(f"player {k} has no dependencies")
    n = inst.n
    adj = combined_adjacency(inst, profile)
    info = []
    for k in (i, j):
        dist = multi_source_bfs(adj, [k])
        targets = [n + y for y in sorted(inst.players[k].dependencies) if dist[n + y] != UNREACHABLE]
        info.append((dist, targets))

    unions = []
    for dist, targets in info:
        u = frozenset()
        for t in targets:
            u |= _shortest_path_dag_g1(adj, dist, t, n)
        unions.append(u)
    if not (unions[0] & unions[1]):
        return True
    if strict:
        return False

    choices = []
    for dist, targets in info:
        acc = {frozenset()}
        for t in targets:
            opts = _g1_path_sets(adj, dist, t, n, path_budget)
            acc = {a | o for a in acc for o in opts}
            if len(acc) > path_budget:
                raise CapacityError(f"more than {path_budget} path selections to compare")
        choices.append(acc)
    return any(not (a & b) for a in choices[0] for b in choices[1])


def radius_separation(inst: GameInstance, i: int, j: int) -> bool:
    """``d_G1(x_i, x_j) >= R_i + R_j - 1`` with both R-radii defined."""
    Ri, Rj = big_r_radius(inst.players[i]), big_r_radius(inst.players[j])
    if Ri is None or Rj is None:
        return False
    d = bfs_distances(inst.g1, i)[j]
    return d >= Ri + Rj - 1
