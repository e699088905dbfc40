import itertools

import pytest
from hypothesis import strategies as st

from indg import Graph
from indg.instances import nine_player_instance, path_pair_instance


@pytest.fixture
def nine():
    return nine_player_instance()


@pytest.fixture
def path_pair():
    return path_pair_instance()


@st.composite
def graphs(draw, min_nodes=0, max_nodes=8):
    n = draw(st.integers(min_nodes, max_nodes))
    pairs = list(itertools.combinations(range(n), 2))
    mask = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph(n, [e for e, keep in zip(pairs, mask) if keep])


@st.composite
def benefit_tables(draw, max_len=5, max_value=10.0):
    """Nonincreasing nonnegative tables, built from sorted draws."""
    k = draw(st.integers(1, max_len))
    vals = draw(st.lists(st.floats(0, max_value, allow_nan=False), min_size=k, max_size=k))
    return sorted(vals, reverse=True)


def all_graphs(n):
    pairs = list(itertools.combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        yield Graph(n, [e for b, e in enumerate(pairs) if mask >> b & 1])


# criterion number -> (passed, detail); filled by test_acceptance.py
ACCEPTANCE_LINES: dict = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(ACCEPTANCE_LINES):
        ok, detail = ACCEPTANCE_LINES[num]
        terminalreporter.write_line(f"criterion {num:>2}: {'PASS' if ok else 'FAIL'}  {detail}")
