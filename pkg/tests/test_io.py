import pytest
from hypothesis import given

from indg import GameInstance, Graph, StrategyProfile
from indg.errors import ParseError
from indg.io import (
    format_edge_list,
    format_instance,
    format_profile,
    parse_edge_list,
    parse_instance,
    parse_profile,
    read_edge_list,
    read_instance,
    write_edge_list,
    write_instance,
    write_profile,
    read_profile,
)

from .conftest import graphs


@given(graphs(max_nodes=10))
def test_edge_list_round_trip(g):
    text = format_edge_list(g, ["generated"])
    assert parse_edge_list(text) == g
    assert format_edge_list(parse_edge_list(text), ["generated"]) == text


def test_edge_list_comments_and_errors():
    assert parse_edge_list("# hi\nn 3\n0 1  # edge\n\n1 2\n").edges() == [(0, 1), (1, 2)]
    for bad, line in [("0 1\n", 1), ("n 2\n0 2\n", 2), ("n 2\n0 x\n", 2), ("n 2\n1 1\n", 2), ("n 2\n0 1 2\n", 2)]:
        with pytest.raises(ParseError) as exc:
            parse_edge_list(bad, "g.txt")
        assert exc.value.line == line and "g.txt" in str(exc.value)
    with pytest.raises(ParseError):
        parse_edge_list("# only comments\n")


def test_instance_round_trip(nine, path_pair, tmp_path):
    for inst in (nine, path_pair):
        text = format_instance(inst)
        back = parse_instance(text)
        assert back == inst
        assert back.complete_dependencies == inst.complete_dependencies
        write_instance(inst, tmp_path / "i.txt")
        assert read_instance(tmp_path / "i.txt") == inst
    assert "deps complete" in format_instance(nine)


def test_instance_grammar_errors():
    good = "nodes 1 2\ng1\ng2\n0 1\ndeps complete\nplayer 0 cost 1 benefits 2 1\n"
    assert parse_instance(good).m == 2
    cases = {
        "g2\n0 1\nplayer 0 cost 1 benefits 2\n": "nodes",
        "nodes 1 2\ng2\n0 5\nplayer 0 cost 1 benefits 2\n": "invalid g2 edge",
        "nodes 1 2\nplayer 0 cost 1 benefits 1 2\n": "nonincreasing",
        "nodes 1 2\nplayer 0 cost 0 benefits 1\n": "positive",
        "nodes 2 2\nplayer 0 cost 1 benefits 1\n": "no player line",
        "nodes 1 2\nplayer 0 cost 1 benefits 1\nplayer 0 cost 1 benefits 1\n": "twice",
        "nodes 1 2\nplayer 0 cost 1 benefits 1\nplayer 1 cost 1 benefits 1\n": "out of range",
        "nodes 1 2\ndeps\n0 3\nplayer 0 cost 1 benefits 1\n": "out of range",
        "nodes 1 2\nbogus line\n": "unexpected",
        "nodes 1 2\nplayer 0 price 1 benefits 1\n": "expected 'player",
    }
    for text, msg in cases.items():
        with pytest.raises(ParseError, match=msg):
            parse_instance(text)


def test_instance_error_line_numbers():
    with pytest.raises(ParseError) as exc:
        parse_instance("nodes 1 2\n# c\nplayer 0 cost 1 benefits 1 2\n", "x.inst")
    assert exc.value.line == 3


def test_partial_dependencies_round_trip():
    inst = GameInstance.build(Graph.path(2), Graph.star(3), [1.0, 2.5], [[1.5, 0.25], [2.0]], [(0, 1), (1, 0), (1, 2)])
    back = parse_instance(format_instance(inst))
    assert back == inst and not back.complete_dependencies


def test_profile_round_trip(tmp_path):
    prof = StrategyProfile([[], [0], [3, 1]])
    assert parse_profile(format_profile(prof), 3) == prof
    write_profile(prof, tmp_path / "p.txt")
    assert read_profile(tmp_path / "p.txt", 3) == prof
    assert parse_profile("action 2 1\n", 3) == StrategyProfile([[], [], [1]])
    for bad in ("act 0\n", "action 3 0\n", "action 0 1 1\n", "action 0\naction 0\n"):
        with pytest.raises(ParseError):
            parse_profile(bad, 3)


def test_missing_file(tmp_path):
    with pytest.raises(ParseError, match="cannot read"):
        read_edge_list(tmp_path / "nope.txt")
    write_edge_list(Graph.path(3), tmp_path / "g.txt")
    assert read_edge_list(tmp_path / "g.txt") == Graph.path(3)
