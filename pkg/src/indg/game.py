"""Game instances, strategy profiles, utilities and per-player radii.

Indexing convention for the combined graph: players' home nodes ``x_0..x_{n-1}``
are ``0..n-1`` and the second network's nodes ``y_0..y_{m-1}`` are
``n..n+m-1``.  Inside a :class:`StrategyProfile` an action is a frozenset of
second-network indices ``0..m-1`` (every edge starts at the player's home).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from enum import Enum
from typing import Iterable, Sequence

from .errors import PreconditionError
from .graph_core import INFINITE, UNREACHABLE, Graph, multi_source_bfs

REL_TOL = 1e-9


def approx_le(a: float, b: float, tol: float = REL_TOL) -> bool:
    """``a <= b`` up to a relative tolerance (for sums of decimal benefits)."""
    return a <= b + tol * max(1.0, abs(a), abs(b))


def strictly_greater(a: float, b: float, tol: float = REL_TOL) -> bool:
    return a > b + tol * max(1.0, abs(a), abs(b))


@dataclass(frozen=True)
class BenefitFunction:
    """Nonincreasing benefit table ``b(1..K)``; zero beyond ``K`` and when unreachable."""

    table: tuple[float, ...]

    def __init__(self, table: Iterable[float]):
        values = tuple(float(b) for b in table)
        if not values:
            raise PreconditionError("benefit table needs at least one entry")
        for d, b in enumerate(values, start=1):
            if not math.isfinite(b) or b < 0:
                raise PreconditionError(f"benefit b({d}) = {b} must be finite and nonnegative")
        for d in range(1, len(values)):
            if values[d] > values[d - 1]:
                raise PreconditionError(
                    f"benefit table must be nonincreasing: b({d}) = {values[d - 1]} < b({d + 1}) = {values[d]}"
                )
        object.__setattr__(self, "table", values)

    @property
    def horizon(self) -> int:
        return len(self.table)

    def __call__(self, d) -> float:
        if d == UNREACHABLE or d > len(self.table):
            return 0.0
        if d < 1:
            raise PreconditionError(f"benefit is defined for distances >= 1, got {d}")
        return self.table[int(d) - 1]


class CostClass(Enum):
    HIGH = "high"
    LOW = "low"


@dataclass(frozen=True)
class Player:
    index: int
    benefit: BenefitFunction
    cost: float
    dependencies: frozenset = frozenset()

    def __post_init__(self):
        if not self.cost > 0:
            raise PreconditionError(f"player {self.index}: edge cost must be positive, got {self.cost}")
        object.__setattr__(self, "dependencies", frozenset(int(y) for y in self.dependencies))

    @property
    def b(self) -> BenefitFunction:
        return self.benefit


@dataclass(frozen=True)
class GameInstance:
    """Two networks, the dependency relation and one player per first-network node.

    Each player carries its own dependency set; :meth:`dependency_edges`
    lists them as ``(i, j)`` pairs meaning ``x_i`` depends on ``y_j``.
    """

    g1: Graph
    g2: Graph
    players: tuple[Player, ...]
    _full: bool = field(default=False, repr=False, compare=False)

    def __post_init__(self):
        players = tuple(self.players)
        object.__setattr__(self, "players", players)
        if len(players) != self.g1.node_count:
            raise PreconditionError(f"{len(players)} players for {self.g1.node_count} first-network nodes")
        m = self.g2.node_count
        for i, p in enumerate(players):
            if p.index != i:
                raise PreconditionError(f"player at position {i} has index {p.index}")
            bad = [y for y in p.dependencies if not 0 <= y < m]
            if bad:
                raise PreconditionError(f"player {i} depends on nodes outside the second network: {sorted(bad)}")
        object.__setattr__(self, "_full", all(len(p.dependencies) == m for p in players))

    @classmethod
    def build(cls, g1: Graph, g2: Graph, costs, benefits, dependencies=None) -> "GameInstance":
        """Convenience constructor.

        ``benefits`` is one table for everyone or a per-player list of tables;
        ``costs`` a scalar or per-player list; ``dependencies`` ``None`` for the
        complete bipartite relation, else an iterable of ``(i, j)`` pairs.
        """
        n, m = g1.node_count, g2.node_count
        if isinstance(costs, (int, float)):
            costs = [costs] * n
        if isinstance(benefits, BenefitFunction) or (benefits and not isinstance(benefits[0], (BenefitFunction, list, tuple))):
            benefits = [benefits] * n
        benefits = [b if isinstance(b, BenefitFunction) else BenefitFunction(b) for b in benefits]
        if len(costs) != n or len(benefits) != n:
            raise PreconditionError("need one cost and one benefit table per player")
        if dependencies is None:
            deps = [frozenset(range(m))] * n
        else:
            sets = [set() for _ in range(n)]
            for i, j in dependencies:
                if not (0 <= i < n and 0 <= j < m):
                    raise PreconditionError(f"dependency ({i}, {j}) out of range")
                sets[i].add(j)
            deps = [frozenset(s) for s in sets]
        players = [Player(i, benefits[i], float(costs[i]), deps[i]) for i in range(n)]
        return cls(g1, g2, tuple(players))

    @property
    def n(self) -> int:
        return self.g1.node_count

    @property
    def m(self) -> int:
        return self.g2.node_count

    @property
    def complete_dependencies(self) -> bool:
        return self._full

    def dependency_edges(self) -> list[tuple[int, int]]:
        return sorted((p.index, y) for p in self.players for y in p.dependencies)


class StrategyProfile(tuple):
    """Per-player actions; each action is a frozenset of second-network indices."""

    def __new__(cls, actions: Iterable[Iterable[int]] = ()):
        return super().__new__(cls, (frozenset(int(y) for y in a) for a in actions))

    @classmethod
    def empty(cls, n: int) -> "StrategyProfile":
        return cls([()] * n)

    def replace(self, i: int, action) -> "StrategyProfile":
        acts = list(self)
        acts[i] = frozenset(action)
        return StrategyProfile(acts)

    @property
    def edge_count(self) -> int:
        return sum(len(a) for a in self)

    def edges(self) -> list[tuple[int, int]]:
        """Interconnection edges as sorted ``(player, y)`` pairs."""
        return sorted((i, y) for i, a in enumerate(self) for y in a)

    def __repr__(self):
        return "StrategyProfile([" + ", ".join(str(sorted(a)) for a in self) + "])"


def check_profile(inst: GameInstance, profile) -> StrategyProfile:
    if not isinstance(profile, StrategyProfile):
        profile = StrategyProfile(profile)
    if len(profile) != inst.n:
        raise PreconditionError(f"profile has {len(profile)} actions for {inst.n} players")
    m = inst.m
    for i, a in enumerate(profile):
        for y in a:
            if not 0 <= y < m:
                raise PreconditionError(f"player {i} action targets y{y}, outside 0..{m - 1}")
    return profile


def combined_adjacency(inst: GameInstance, profile) -> list[list[int]]:
    n = inst.n
    adj = [list(nb) for nb in inst.g1.adjacency]
    adj.extend([n + w for w in nb] for nb in inst.g2.adjacency)
    for i, a in enumerate(profile):
        for y in a:
            adj[i].append(n + y)
            adj[n + y].append(i)
    return adj


def combine(inst: GameInstance, profile) -> Graph:
    """The combined network on ``V1 ∪ V2`` with all interconnection edges."""
    profile = check_profile(inst, profile)
    return Graph.from_adjacency(combined_adjacency(inst, profile))


def _benefit_sum(player: Player, dist, n: int) -> float:
    b = player.benefit
    return sum(b(dist[n + y]) for y in sorted(player.dependencies))


def player_utility(inst: GameInstance, profile, i: int) -> float:
    """Benefit from reaching each dependency minus the player's own edge costs."""
    profile = check_profile(inst, profile)
    if not 0 <= i < inst.n:
        raise PreconditionError(f"no player {i}")
    p = inst.players[i]
    if not p.dependencies:
        return -p.cost * len(profile[i])
    dist = multi_source_bfs(combined_adjacency(inst, profile), [i])
    return _benefit_sum(p, dist, inst.n) - p.cost * len(profile[i])


def utilities(inst: GameInstance, profile) -> list[float]:
    profile = check_profile(inst, profile)
    adj = combined_adjacency(inst, profile)
    out = []
    for p in inst.players:
        u = -p.cost * len(profile[p.index])
        if p.dependencies:
            u += _benefit_sum(p, multi_source_bfs(adj, [p.index]), inst.n)
        out.append(u)
    return out


def social_welfare(inst: GameInstance, profile) -> float:
    return math.fsum(utilities(inst, profile))


def classify(player: Player) -> CostClass:
    """Low cost when ``b(1) - b(2) >= c``, with equality judged up to :data:`REL_TOL`."""
    b = player.benefit
    return CostClass.LOW if approx_le(player.cost, b(1) - b(2)) else CostClass.HIGH


def _radius_lhs(player: Player, m: int) -> float:
    b = player.benefit
    return b(1) - player.cost + (m - 1) * b(2)


def _scan_radius(lhs: float, rhs, stop: int) -> float:
    # rhs is nonincreasing in the radius and rhs(0) >= lhs always holds.
    # Past the benefit horizon rhs is 0, so surviving to `stop` means no maximum.
    if lhs < 0:
        return INFINITE
    radius = 0
    while approx_le(lhs, rhs(radius + 1)):
        radius += 1
        if radius > stop:
            return INFINITE
    return radius


def l_radius(player: Player, m: int) -> float:
    """Largest ``L >= 0`` with ``b(1) - c + (m-1) b(2) <= m b(L+1)``."""
    if m < 1:
        raise PreconditionError("m must be at least 1")
    b = player.benefit
    return _scan_radius(_radius_lhs(player, m), lambda L: m * b(L + 1), b.horizon + 2)


def r_radius(player: Player, m: int) -> float:
    """Largest ``r >= 0`` with ``b(1) - c + (m-1) b(2) <= b(r+1) + (m-1) b(r+2)``."""
    if m < 1:
        raise PreconditionError("m must be at least 1")
    b = player.benefit
    return _scan_radius(_radius_lhs(player, m), lambda r: b(r + 1) + (m - 1) * b(r + 2), b.horizon + 2)


def big_r_radius(player: Player) -> float | None:
    """Smallest ``R > 0`` with ``b(1) - c > b(R+1)``; ``None`` unless ``b(1) > c``."""
    b = player.benefit
    gain = b(1) - player.cost
    if gain <= 0:
        return None
    for R in range(1, b.horizon + 1):
        if gain > b(R + 1):
            return R
    return INFINITE  # unreachable with a zero tail; kept for completeness


def r_neighborhood(inst: GameInstance, i: int, radii: Sequence[float]) -> frozenset:
    """High-cost players' home nodes within first-network distance ``radii[i]`` of ``x_i``."""
    if not 0 <= i < inst.n:
        raise PreconditionError(f"no player {i}")
    r = radii[i]
    limit = None if r == INFINITE else int(r)
    dist = multi_source_bfs(inst.g1.adjacency, [i], limit=limit)
    return frozenset(
        j for j in range(inst.n) if dist[j] != UNREACHABLE and classify(inst.players[j]) is CostClass.HIGH
    )
