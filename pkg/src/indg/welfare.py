"""Social optimum, equilibrium enumeration and price of anarchy on small instances."""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations, product

from .best_response import is_nash_equilibrium
from .errors import CapacityError, PreconditionError
from .game import GameInstance, StrategyProfile, social_welfare, strictly_greater
from .graph_core import INFINITE, Graph

MAX_EXPONENT = 16

POA_OK = "ok"
POA_INFINITE = "infinite"
POA_UNDEFINED = "undefined"
POA_NO_EQUILIBRIUM = "no_equilibrium"


def _actions(m: int) -> list[frozenset]:
    return [frozenset(c) for size in range(m + 1) for c in combinations(range(m), size)]


def joint_profiles(inst: GameInstance, max_exponent: int = MAX_EXPONENT):
    """All joint profiles, mixed-radix with player 0 most significant."""
    if inst.n * inst.m > max_exponent:
        raise CapacityError(
            f"joint space 2^({inst.n}*{inst.m}) exceeds the 2^{max_exponent} enumeration budget"
        )
    acts = _actions(inst.m)
    for combo in product(acts, repeat=inst.n):
        yield StrategyProfile(combo)


def socially_optimal(inst: GameInstance, max_exponent: int = MAX_EXPONENT) -> tuple[StrategyProfile, float]:
    best, best_w = None, -math.inf
    for prof in joint_profiles(inst, max_exponent):
        w = social_welfare(inst, prof)
        if best is None or strictly_greater(w, best_w):
            best, best_w = prof, w
    return best, best_w


def enumerate_equilibria(inst: GameInstance, max_exponent: int = MAX_EXPONENT) -> list[StrategyProfile]:
    return [p for p in joint_profiles(inst, max_exponent) if is_nash_equilibrium(inst, p)]


@dataclass(frozen=True)
class PoaResult:
    optimal_welfare: float
    min_equilibrium_welfare: float | None
    poa: float | None  # INFINITE when the worst equilibrium is non-positive, None when undefined
    equilibrium_count: int
    status: str
    optimal_profile: StrategyProfile | None = None
    worst_equilibrium: StrategyProfile | None = None

    def to_dict(self):
        poa = self.poa
        if poa == INFINITE:
            poa = "inf"
        return {
            "status": self.status,
            "optimal_welfare": self.optimal_welfare,
            "min_equilibrium_welfare": self.min_equilibrium_welfare,
            "poa": poa,
            "equilibrium_count": self.equilibrium_count,
        }


def price_of_anarchy(inst: GameInstance, max_exponent: int = MAX_EXPONENT) -> PoaResult:
    """Best welfare over all profiles divided by the worst equilibrium welfare.

    ``poa`` is ``INFINITE`` when the worst equilibrium welfare is ``<= 0`` but
    the optimum is positive, and ``None`` when the optimum itself is ``<= 0``.
    """
    opt_profile, opt = socially_optimal(inst, max_exponent)
    eqs = enumerate_equilibria(inst, max_exponent)
    if not eqs:
        return PoaResult(opt, None, None, 0, POA_NO_EQUILIBRIUM, opt_profile)
    welfare = [social_welfare(inst, p) for p in eqs]
    k = min(range(len(eqs)), key=welfare.__getitem__)
    worst = welfare[k]
    if opt <= 0:
        poa, status = None, POA_UNDEFINED
    elif worst <= 0:
        poa, status = INFINITE, POA_INFINITE
    else:
        poa, status = opt / worst, POA_OK
    return PoaResult(opt, worst, poa, len(eqs), status, opt_profile, eqs[k])


def unbounded_poa_instance(n: int, m: int) -> GameInstance:
    """Stars on both sides, full dependencies, ``c = 2.1``, ``b = (1, 1/(m-1), 1/(m-1))``.

    No player ever builds, yet one hub-to-hub edge yields positive welfare.
    Requires ``n > m > 1``.
    """
    if not n > m > 1:
        raise PreconditionError("needs n > m > 1")
    tail = 1.0 / (m - 1)
    return GameInstance.build(Graph.star(n), Graph.star(m), 2.1, [1.0, tail, tail])
