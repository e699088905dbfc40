"""Equilibria can be arbitrarily worse than the optimum.

With costs just above b(1) and a hub on both sides, nobody builds in any
equilibrium while a single edge would give everyone positive utility.
"""

from indg import enumerate_equilibria, price_of_anarchy, social_welfare, socially_optimal
from indg.welfare import unbounded_poa_instance

for n, m in [(3, 2), (4, 2), (4, 3), (5, 3)]:
    inst = unbounded_poa_instance(n, m)
    eqs = enumerate_equilibria(inst)
    best, opt = socially_optimal(inst)
    res = price_of_anarchy(inst)
    builders = [i + 1 for i, a in enumerate(best) if a]
    print(f"n={n} m={m}: {len(eqs)} equilibria, welfare {sorted({social_welfare(inst, e) for e in eqs})}")
    print(f"  optimum {opt:.3f} (closed form {-0.1 + (n - 1) * m / (m - 1):.3f}) built by x{builders}")
    print(f"  price of anarchy: {res.poa}")
