"""Small hand-checkable instances used by the tests and demo scripts."""

from __future__ import annotations

from .game import GameInstance
from .graph_core import Graph

# Benefit tables b(1..5) of the nine-player instance, player order x1..x9.
NINE_PLAYER_BENEFITS = (
    (1.5, 1.3, 1.2, 1.1, 0.2),
    (1.2, 0.8, 0.5, 0.2, 0.0),
    (1.1, 0.9, 0.1, 0.0, 0.0),
    (0.9, 0.8, 0.7, 0.5, 0.2),
    (1.2, 1.1, 0.9, 0.2, 0.1),
    (1.3, 1.0, 0.5, 0.4, 0.3),
    (3.0, 1.0, 0.5, 0.5, 0.4),
    (1.2, 0.8, 0.7, 0.5, 0.4),
    (1.2, 1.1, 1.1, 1.0, 0.2),
)

# First network as (x_a, x_b) with 1-based labels.
NINE_PLAYER_G1 = ((8, 1), (8, 7), (7, 3), (3, 5), (3, 6), (3, 2), (6, 4), (2, 9))


def nine_player_instance() -> GameInstance:
    """Nine players on a tree, a 7-node star as second network, unit costs, full dependencies.

    Player 7 (index 6) is the only low-cost player.  Expected (L, r) radii for
    x1..x9: (2,1), (1,0), (1,0), (2,1), (1,0), (1,0), low-cost, (1,1), (3,2).
    """
    g1 = Graph(9, [(a - 1, b - 1) for a, b in NINE_PLAYER_G1])
    return GameInstance.build(g1, Graph.star(7), 1.0, [list(b) for b in NINE_PLAYER_BENEFITS])


def path_pair_instance(benefits=(4.0, 3.0, 2.5, 1.0), cost: float = 2.0) -> GameInstance:
    """Six-node path x1..x6 where only the two end players depend on (all of) the second network.

    The second network has y1 adjacent to y3, y4, y5 and y2, y6 isolated.
    With the defaults, b(3) > b(1) - c > b(4), so both end players have R = 3,
    and x1's best response against an empty profile is {y1, y2, y6}.
    """
    g1 = Graph.path(6)
    g2 = Graph(6, [(0, 2), (0, 3), (0, 4)])
    deps = [(i, y) for i in (0, 5) for y in range(6)]
    return GameInstance.build(g1, g2, cost, list(benefits), deps)


def tiny_hub_instance(n: int = 3, m: int = 2) -> GameInstance:
    """Stars on both sides with costs high enough that nobody builds; see :func:`indg.welfare.unbounded_poa_instance`."""
    from .welfare import unbounded_poa_instance

    return unbounded_poa_instance(n, m)
