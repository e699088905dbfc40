"""Best responses on a six-node path where only the two ends care about the second network.

x1 buys three edges against an empty profile.  Sequential dynamics then settle
on a profile where x6 leans on x1's edges, and the shortest paths that carry
x1 and x6 to their targets share no interior node.
"""

from indg import (
    StrategyProfile,
    brute_force_best_response,
    check_disjoint_shortest_paths,
    is_nash_equilibrium,
    player_utility,
    sequential_brd,
)
from indg.game import big_r_radius
from indg.instances import path_pair_instance

inst = path_pair_instance()
empty = StrategyProfile.empty(inst.n)

res = brute_force_best_response(inst, empty, 0)
print(f"x1 alone buys {sorted(y + 1 for y in res.action)} for utility {res.utility:g}")
print(f"pruning rules that fired: {', '.join(res.pruning_trace) or 'none'}")
print(f"R-radius of both end players: {big_r_radius(inst.players[0])}")

profile, converged, rounds = sequential_brd(inst, empty)
print(f"\ndynamics converged={converged} after {rounds} rounds")
for i, a in enumerate(profile):
    if a:
        print(f"  x{i + 1}: {sorted(y + 1 for y in a)}  utility {player_utility(inst, profile, i):g}")
print(f"equilibrium: {is_nash_equilibrium(inst, profile).is_equilibrium}")
print(f"x1 and x6 use disjoint shortest paths: {check_disjoint_shortest_paths(inst, profile, 0, 5)}")
