import math
import random

import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from indg import (
    INFINITE,
    BenefitFunction,
    CostClass,
    GameInstance,
    Graph,
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
from indg.errors import PreconditionError
from indg.graph_core import bfs_distances

from .conftest import benefit_tables

EXPECTED_RADII = [(2, 1), (1, 0), (1, 0), (2, 1), (1, 0), (1, 0), None, (1, 1), (3, 2)]
HOMOGENEOUS_B = (1.2, 0.7, 0.6, 0.5, 0.3, 0.2)


def player(table, cost, deps=()):
    return Player(0, BenefitFunction(table), cost, frozenset(deps))


def test_benefit_function_zero_tail_and_unreachable():
    b = BenefitFunction([3, 2, 1])
    assert (b(1), b(3), b(4), b(math.inf)) == (3, 1, 0, 0)
    assert b.horizon == 3


@pytest.mark.parametrize("table", [[1, 2], [-1], [], [1, math.nan]])
def test_benefit_function_rejects_bad_tables(table):
    with pytest.raises(PreconditionError):
        BenefitFunction(table)


def test_player_cost_must_be_positive():
    with pytest.raises(PreconditionError):
        player([1], 0)


def test_instance_validation():
    with pytest.raises(PreconditionError):
        GameInstance.build(Graph(2), Graph(2), [1.0], [1.0])
    with pytest.raises(PreconditionError):
        GameInstance.build(Graph(1), Graph(2), 1.0, [1.0], [(0, 2)])


def test_combine():
    inst = GameInstance.build(Graph.path(2), Graph.path(2), 1.0, [1.0], [(0, 0)])
    g = combine(inst, StrategyProfile.empty(2))
    assert g.edges() == [(0, 1), (2, 3)]
    g = combine(inst, [[1], []])
    assert g.has_edge(0, 3) and g.edge_count == 3
    single = GameInstance.build(Graph(1), Graph(1), 1.0, [1.0])
    assert combine(single, [[0]]).edges() == [(0, 1)]
    with pytest.raises(PreconditionError):
        combine(inst, [[0]])
    with pytest.raises(PreconditionError):
        combine(inst, [[2], []])


def test_nine_player_combined_graph(nine):
    prof = StrategyProfile([[], [0], [], [], [0], [0], range(7), [], []])
    g = combine(nine, prof)
    assert g.node_count == 16
    assert g.edge_count == 8 + 6 + 10


def test_utility_trivial_cases():
    inst = GameInstance.build(Graph(1), Graph(3), 1.0, [1.0], [])
    assert player_utility(inst, [[]], 0) == 0
    assert player_utility(inst, [[1, 2]], 0) == -2.0


def test_utility_poa_builder():
    n, m, c, b1, b2 = 4, 3, 2.1, 1.0, 0.5
    inst = GameInstance.build(Graph.star(n), Graph.star(m), c, [b1, b2, b2])
    prof = StrategyProfile.empty(n).replace(0, [0])
    assert player_utility(inst, prof, 0) == pytest.approx(b1 - c + (m - 1) * b2)
    assert social_welfare(inst, prof) == pytest.approx(-0.1 + (n - 1) * m / (m - 1))


def test_empty_profile_disjoint_networks_zero_welfare():
    inst = GameInstance.build(Graph.path(3), Graph.path(3), 1.0, [5.0, 4.0])
    assert social_welfare(inst, StrategyProfile.empty(3)) == 0


def recompute_utility(inst, profile, i):
    # Independent oracle: BFS per dependency target on the combined graph.
    g = combine(inst, profile)
    p = inst.players[i]
    total = 0.0
    for y in p.dependencies:
        d = bfs_distances(g, inst.n + y)[i]
        total += p.benefit(d)
    return total - p.cost * len(profile[i])


@settings(max_examples=200)
@given(st.integers(0, 2**32 - 1))
def test_utility_matches_independent_recomputation(seed):
    rng = random.Random(seed)
    n, m = rng.randint(1, 4), rng.randint(1, 4)
    g1 = Graph(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < 0.4])
    g2 = Graph(m, [(u, v) for u in range(m) for v in range(u + 1, m) if rng.random() < 0.4])
    tables = [sorted((rng.uniform(0, 3) for _ in range(3)), reverse=True) for _ in range(n)]
    costs = [rng.uniform(0.1, 2) for _ in range(n)]
    deps = [(i, y) for i in range(n) for y in range(m) if rng.random() < 0.6]
    inst = GameInstance.build(g1, g2, costs, tables, deps)
    prof = StrategyProfile([[y for y in range(m) if rng.random() < 0.3] for _ in range(n)])
    us = utilities(inst, prof)
    for i in range(n):
        assert player_utility(inst, prof, i) == pytest.approx(recompute_utility(inst, prof, i))
        assert us[i] == player_utility(inst, prof, i)
    assert social_welfare(inst, prof) == math.fsum(us)


def test_classify(nine):
    assert classify(nine.players[6]) is CostClass.LOW
    assert classify(nine.players[0]) is CostClass.HIGH
    assert classify(player([3, 2], 1)) is CostClass.LOW  # boundary b(1) - b(2) == c


def test_nine_player_radii(nine):
    for p, want in zip(nine.players, EXPECTED_RADII):
        if want is None:
            assert classify(p) is CostClass.LOW
        else:
            assert (l_radius(p, 7), r_radius(p, 7)) == want


def test_homogeneous_radii():
    p = player(HOMOGENEOUS_B, 1250)
    assert r_radius(p, 5000) == 2
    assert l_radius(p, 5000) == 3


def test_radii_infinite_when_lhs_negative():
    p = player([1, 0.1], 5)
    assert l_radius(p, 3) == INFINITE and r_radius(p, 3) == INFINITE


def test_big_r_radius(path_pair):
    assert big_r_radius(path_pair.players[0]) == 3
    assert big_r_radius(path_pair.players[5]) == 3
    assert big_r_radius(player([5, 1], 1)) == 1
    assert big_r_radius(player([1, 1], 1)) is None


@settings(max_examples=500)
@given(benefit_tables(), st.floats(0.01, 20), st.integers(1, 50))
def test_r_radius_at_most_l_radius(table, cost, m):
    p = player(table, cost)
    L, r = l_radius(p, m), r_radius(p, m)
    lhs = p.benefit(1) - cost + (m - 1) * p.benefit(2)
    if lhs > 1e-6:
        assert math.isfinite(L) and math.isfinite(r)
    if lhs < 0:
        assert L == INFINITE and r == INFINITE
    if math.isfinite(L) and math.isfinite(r):
        assert r <= L


@given(benefit_tables(), st.floats(0.01, 20), st.integers(1, 50))
def test_radius_definitions_hold(table, cost, m):
    p = player(table, cost)
    b = p.benefit
    lhs = b(1) - cost + (m - 1) * b(2)
    assume(lhs > 1e-6)
    L, r = l_radius(p, m), r_radius(p, m)
    assert lhs <= m * b(L + 1) * (1 + 1e-9)
    assert lhs > m * b(L + 2) * (1 + 1e-9)
    assert lhs <= (b(r + 1) + (m - 1) * b(r + 2)) * (1 + 1e-9)
    assert lhs > (b(r + 2) + (m - 1) * b(r + 3)) * (1 + 1e-9)


def test_r_neighborhood(nine):
    radii = [r_radius(p, 7) for p in nine.players]
    assert 5 in r_neighborhood(nine, 3, radii)
    zero = r_neighborhood(nine, 1, radii)
    assert zero == {1}
    inst = GameInstance.build(Graph.path(5), Graph.star(3), 10.0, [1.0, 0.5])
    assert r_neighborhood(inst, 2, [2] * 5) == {0, 1, 2, 3, 4}
    assert r_neighborhood(inst, 0, [1] * 5) == {0, 1}
    assert r_neighborhood(inst, 0, [INFINITE] * 5) == {0, 1, 2, 3, 4}
