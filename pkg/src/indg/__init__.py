"""Interconnection network design games: players on one network buy edges into another."""

from .best_response import (
    BestResponseResult,
    NashCheck,
    StarEvaluator,
    best_response_set,
    brute_force_best_response,
    check_disjoint_shortest_paths,
    is_nash_equilibrium,
    sequential_brd,
    star_best_response,
)
from .equilibrium import EquilibriumTrace, PlayerStatus, free_rider_report, star_nash_equilibrium
from .errors import CapacityError, IndgError, ParseError, PreconditionError, VerificationError
from .game import (
    BenefitFunction,
    CostClass,
    GameInstance,
    Player,
    StrategyProfile,
    big_r_radius,
    classify,
    combine,
    l_radius,
    player_utility,
    r_neighborhood,
    r_radius,
    social_welfare,
    utilities,
)
from .graph_core import (
    INFINITE,
    UNREACHABLE,
    DominatingSet,
    Graph,
    bfs_distances,
    diameter,
    find_hub,
    is_dominating_set,
    min_dominating_set,
)
from .hardness import BriInstance, decide_bri_brute, decide_dominating_set_brute, reduce_dominating_set, verify_reduction
from .random_graphs import add_hub, erdos_renyi, geometric_random, preferential_attachment, sample_costs
from .simulation import ScenarioConfig, ScenarioReport, emit_report, export_dot, load_config, preset, run_scenario
from .welfare import PoaResult, enumerate_equilibria, price_of_anarchy, socially_optimal, unbounded_poa_instance

__all__ = [
    "BestResponseResult",
    "NashCheck",
    "StarEvaluator",
    "best_response_set",
    "brute_force_best_response",
    "check_disjoint_shortest_paths",
    "is_nash_equilibrium",
    "sequential_brd",
    "star_best_response",
    "EquilibriumTrace",
    "PlayerStatus",
    "free_rider_report",
    "star_nash_equilibrium",
    "CapacityError",
    "IndgError",
    "ParseError",
    "PreconditionError",
    "VerificationError",
    "BenefitFunction",
    "CostClass",
    "GameInstance",
    "Player",
    "StrategyProfile",
    "big_r_radius",
    "classify",
    "combine",
    "l_radius",
    "player_utility",
    "r_neighborhood",
    "r_radius",
    "social_welfare",
    "utilities",
    "INFINITE",
    "UNREACHABLE",
    "DominatingSet",
    "Graph",
    "bfs_distances",
    "diameter",
    "find_hub",
    "is_dominating_set",
    "min_dominating_set",
    "BriInstance",
    "decide_bri_brute",
    "decide_dominating_set_brute",
    "reduce_dominating_set",
    "verify_reduction",
    "add_hub",
    "erdos_renyi",
    "geometric_random",
    "preferential_attachment",
    "sample_costs",
    "ScenarioConfig",
    "ScenarioReport",
    "emit_report",
    "export_dot",
    "load_config",
    "preset",
    "run_scenario",
    "PoaResult",
    "enumerate_equilibria",
    "price_of_anarchy",
    "socially_optimal",
    "unbounded_poa_instance",
]

__version__ = "0.1.0"
