"""Dominating set questions answered through the best-response problem.

Each graph is turned into a one-player instance whose utility threshold is
reachable exactly when the graph has a dominating set of size k.
"""

from indg import Graph, decide_bri_brute, decide_dominating_set_brute, min_dominating_set, reduce_dominating_set
from indg.io import format_instance

graphs = {
    "star on 5 nodes": Graph.star(5),
    "cycle on 6 nodes": Graph.cycle(6),
    "path on 7 nodes": Graph.path(7),
    "3 isolated nodes": Graph(3),
}
for name, g in graphs.items():
    gamma = len(min_dominating_set(g).nodes)
    print(f"{name}: domination number {gamma}")
    for k in range(1, g.node_count + 1):
        bri = reduce_dominating_set(g, k)
        ds, br = decide_dominating_set_brute(g, k), decide_bri_brute(bri)
        print(f"  k={k}: threshold {bri.threshold:g}, dominating set {ds}, best response {br}")

print("\nreduced instance for the 6-cycle with k=2:")
print(format_instance(reduce_dominating_set(Graph.cycle(6), 2).game))
