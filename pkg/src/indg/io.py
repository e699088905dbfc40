"""Plain-text formats for graphs, game instances and strategy profiles.

Edge list::

    # comment
    n 4
    0 1
    1 2

Instance (sections may appear in any order; ``#`` starts a comment)::

    nodes 9 7            # first-network size n, second-network size m
    g1                   # following lines: first-network edges "u v"
    0 7
    g2
    0 1
    deps complete        # or a bare "deps" section of "i j" pairs (x_i depends on y_j)
    player 0 cost 1 benefits 1.5 1.3 1.2 1.1 0.2

Every player ``0..n-1`` needs exactly one ``player`` line.

Profile::

    action 6 0 1 2 3 4 5 6    # player 6 wires to y0..y6
    action 1 0                # player 1 wires to y0

Players without an ``action`` line play the empty action.
"""

from __future__ import annotations

from pathlib import Path

from .errors import ParseError, PreconditionError
from .game import BenefitFunction, GameInstance, Player, StrategyProfile
from .graph_core import Graph


def _lines(text: str):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield lineno, line.split()


def _int(tok, lineno, source, what="integer"):
    try:
        return int(tok)
    except ValueError:
        raise ParseError(f"expected {what}, got {tok!r}", lineno, source) from None


def _float(tok, lineno, source):
    try:
        return float(tok)
    except ValueError:
        raise ParseError(f"expected a number, got {tok!r}", lineno, source) from None


def _read(path):
    p = Path(path)
    try:
        return p.read_text(), str(p)
    except OSError as exc:
        raise ParseError(f"cannot read {p}: {exc.strerror}", source=str(p)) from exc


def parse_edge_list(text: str, source=None) -> Graph:
    n, edges = None, []
    for lineno, toks in _lines(text):
        if n is None:
            if len(toks) != 2 or toks[0] != "n":
                raise ParseError("first line must be 'n <node_count>'", lineno, source)
            n = _int(toks[1], lineno, source)
            if n < 0:
                raise ParseError("node count must be nonnegative", lineno, source)
            continue
        if len(toks) != 2:
            raise ParseError(f"expected 'u v', got {' '.join(toks)!r}", lineno, source)
        u, v = _int(toks[0], lineno, source), _int(toks[1], lineno, source)
        if not (0 <= u < n and 0 <= v < n):
            raise ParseError(f"edge ({u}, {v}) out of range for {n} nodes", lineno, source)
        if u == v:
            raise ParseError(f"self-loop at node {u}", lineno, source)
        edges.append((u, v))
    if n is None:
        raise ParseError("missing 'n <node_count>' line", source=source)
    return Graph(n, edges)


def read_edge_list(path) -> Graph:
    text, source = _read(path)
    return parse_edge_list(text, source)


def format_edge_list(g: Graph, header=()) -> str:
    out = [f"# {h}" for h in header]
    out.append(f"n {g.node_count}")
    out.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(out) + "\n"


def write_edge_list(g: Graph, path, header=()) -> None:
    try:
        Path(path).write_text(format_edge_list(g, header))
    except OSError as exc:
        raise OSError(f"cannot write edge list to {path}: {exc.strerror}") from exc


def parse_instance(text: str, source=None) -> GameInstance:
    sizes = None
    section = None
    g1_edges, g2_edges, dep_pairs = [], [], []
    complete = False
    players: dict[int, tuple[float, list[float], int]] = {}
    for lineno, toks in _lines(text):
        head = toks[0]
        if head == "nodes":
            if len(toks) != 3:
                raise ParseError("expected 'nodes <n> <m>'", lineno, source)
            sizes = (_int(toks[1], lineno, source), _int(toks[2], lineno, source))
            section = None
        elif head in ("g1", "g2") and len(toks) == 1:
            section = head
        elif head == "deps":
            if len(toks) == 2 and toks[1] == "complete":
                complete, section = True, None
            elif len(toks) == 1:
                section = "deps"
            else:
                raise ParseError("expected 'deps' or 'deps complete'", lineno, source)
        elif head == "player":
            if len(toks) < 6 or toks[2] != "cost" or toks[4] != "benefits":
                raise ParseError("expected 'player <i> cost <c> benefits <b1> ...'", lineno, source)
            i = _int(toks[1], lineno, source)
            if i in players:
                raise ParseError(f"player {i} defined twice", lineno, source)
            cost = _float(toks[3], lineno, source)
            bens = [_float(t, lineno, source) for t in toks[5:]]
            players[i] = (cost, bens, lineno)
            section = None
        elif section is not None and len(toks) == 2:
            pair = (_int(toks[0], lineno, source), _int(toks[1], lineno, source))
            {"g1": g1_edges, "g2": g2_edges, "deps": dep_pairs}[section].append((pair, lineno))
        else:
            raise ParseError(f"unexpected line {' '.join(toks)!r}", lineno, source)

    if sizes is None:
        raise ParseError("missing 'nodes <n> <m>' line", source=source)
    n, m = sizes

    def graph(edges, count, name):
        for (u, v), lineno in edges:
            if not (0 <= u < count and 0 <= v < count) or u == v:
                raise ParseError(f"invalid {name} edge ({u}, {v})", lineno, source)
        return Graph(count, [e for e, _ in edges])

    g1, g2 = graph(g1_edges, n, "g1"), graph(g2_edges, m, "g2")
    if complete and dep_pairs:
        raise ParseError("'deps complete' cannot be combined with a deps section", dep_pairs[0][1], source)
    deps = [set(range(m)) if complete else set() for _ in range(n)]
    for (i, j), lineno in dep_pairs:
        if not (0 <= i < n and 0 <= j < m):
            raise ParseError(f"dependency ({i}, {j}) out of range", lineno, source)
        deps[i].add(j)
    missing = sorted(set(range(n)) - set(players))
    if missing:
        raise ParseError(f"no player line for players {missing}", source=source)
    built = []
    for i in range(n):
        cost, bens, lineno = players[i]
        try:
            built.append(Player(i, BenefitFunction(bens), cost, frozenset(deps[i])))
        except PreconditionError as exc:
            raise ParseError(str(exc), lineno, source) from None
    extra = sorted(set(players) - set(range(n)))
    if extra:
        raise ParseError(f"player {extra[0]} out of range 0..{n - 1}", players[extra[0]][2], source)
    return GameInstance(g1, g2, tuple(built))


def read_instance(path) -> GameInstance:
    text, source = _read(path)
    return parse_instance(text, source)


def _num(x: float) -> str:
    return repr(float(x)) if float(x) != int(x) else str(int(x))


def format_instance(inst: GameInstance, header=()) -> str:
    out = [f"# {h}" for h in header]
    out.append(f"nodes {inst.n} {inst.m}")
    out.append("g1")
    out.extend(f"{u} {v}" for u, v in inst.g1.edges())
    out.append("g2")
    out.extend(f"{u} {v}" for u, v in inst.g2.edges())
    if inst.complete_dependencies:
        out.append("deps complete")
    else:
        out.append("deps")
        out.extend(f"{i} {j}" for i, j in inst.dependency_edges())
    for p in inst.players:
        bens = " ".join(_num(b) for b in p.benefit.table)
        out.append(f"player {p.index} cost {_num(p.cost)} benefits {bens}")
    return "\n".join(out) + "\n"


def write_instance(inst: GameInstance, path, header=()) -> None:
    Path(path).write_text(format_instance(inst, header))


def parse_profile(text: str, n: int, source=None) -> StrategyProfile:
    actions = [None] * n
    for lineno, toks in _lines(text):
        if toks[0] != "action" or len(toks) < 2:
            raise ParseError("expected 'action <i> <y> ...'", lineno, source)
        i = _int(toks[1], lineno, source)
        if not 0 <= i < n:
            raise ParseError(f"player {i} out of range 0..{n - 1}", lineno, source)
        if actions[i] is not None:
            raise ParseError(f"player {i} has two action lines", lineno, source)
        targets = [_int(t, lineno, source) for t in toks[2:]]
        if len(set(targets)) != len(targets):
            raise ParseError(f"duplicate edge in action of player {i}", lineno, source)
        actions[i] = targets
    return StrategyProfile(a or () for a in actions)


def read_profile(path, n: int) -> StrategyProfile:
    text, source = _read(path)
    return parse_profile(text, n, source)


def format_profile(profile) -> str:
    lines = []
    for i, a in enumerate(profile):
        lines.append(" ".join(["action", str(i)] + [str(y) for y in sorted(a)]))
    return "\n".join(lines) + "\n"


def write_profile(profile, path) -> None:
    Path(path).write_text(format_profile(profile))
