"""Nine players on a tree, one low-cost player, a star-shaped second network.

Walks through the radii, the constructed equilibrium and who free-rides on whom.
"""

from indg import free_rider_report, is_nash_equilibrium, l_radius, r_radius, social_welfare, star_nash_equilibrium
from indg.instances import nine_player_instance

inst = nine_player_instance()
print("player  cost  b(1)-b(2)  L  r")
for i, p in enumerate(inst.players):
    gap = p.benefit(1) - p.benefit(2)
    if p.cost <= gap:
        print(f"x{i + 1:<6} {p.cost:<5} {gap:<10.2f} low cost, wires to every node")
    else:
        print(f"x{i + 1:<6} {p.cost:<5} {gap:<10.2f} {l_radius(p, inst.m)}  {r_radius(p, inst.m)}")

profile, trace = star_nash_equilibrium(inst)
print("\nequilibrium actions (second-network nodes, 1-based):")
for i, action in enumerate(profile):
    print(f"  x{i + 1}: {sorted(y + 1 for y in action) or '-'}")

print("\nwhy each player ended up where it did:")
for i, status in free_rider_report(trace).items():
    via = f" via x{status.via + 1}" if status.via is not None else ""
    print(f"  x{i + 1}: {status.kind}{via}")

check = is_nash_equilibrium(inst, profile, mode="brute_force")
print(f"\nbrute-force equilibrium check: {check.is_equilibrium}")
print(f"social welfare: {social_welfare(inst, profile):.2f}")
