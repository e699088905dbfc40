"""The three random families used for the first network, at full size (500 nodes)."""

import statistics

from indg import diameter, erdos_renyi, geometric_random, preferential_attachment
from indg.random_graphs import add_hub

gens = {
    "scale-free (5 seeds, 6 links)": lambda s: preferential_attachment(500, 5, 6, s),
    "Erdos-Renyi (p = 0.024)": lambda s: erdos_renyi(500, 0.024, s),
    "geometric (side 2, radius 0.18)": lambda s: geometric_random(500, 2.0, 0.18, s),
}
for name, gen in gens.items():
    graphs = [gen(seed) for seed in range(10)]
    edges = statistics.mean(g.edge_count for g in graphs)
    diam = [diameter(g) for g in graphs]
    finite = [d for d in diam if d != float("inf")]
    shown = f"{statistics.mean(finite):.2f}" if finite else "-"
    print(f"{name}: mean |E| {edges:.1f}, mean finite diameter {shown}, disconnected {len(diam) - len(finite)}/10")

g2 = add_hub(preferential_attachment(5000, 5, 1, 0), 0)
print(f"\nsecond network: {g2.node_count} nodes, {g2.edge_count} edges, node 0 degree {len(g2.neighbors(0))}")
