"""Scenario runner for the random-network study: configs, trials, reports, DOT export.

A trial draws the first network, the second network (made into a star by
joining one node to all others), and the players' edge costs, builds the
equilibrium with :func:`indg.equilibrium.star_nash_equilibrium`, checks it
with the star-restricted equilibrium test, and records summary statistics.

Per-trial randomness: ``SeedSequence(seed, spawn_key=(trial,))`` is split
into three child streams (first network, second network, costs), so two
configs that share a seed and graph settings see identical graphs in every
trial regardless of their cost settings.
"""

from __future__ import annotations

import csv
import io
import json
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field, fields, replace
from importlib import resources
from pathlib import Path

import numpy as np

from .best_response import StarEvaluator, is_nash_equilibrium
from .errors import PreconditionError, VerificationError
from .game import BenefitFunction, CostClass, GameInstance, StrategyProfile, classify
from .graph_core import Graph, diameter
from .equilibrium import star_nash_equilibrium
from .io import read_edge_list
from .random_graphs import (
    add_hub,
    constant_costs,
    erdos_renyi,
    geometric_random,
    preferential_attachment,
    sample_costs,
)

DEFAULT_BENEFITS = (1.2, 0.7, 0.6, 0.5, 0.3, 0.2)

FAMILY_DEFAULTS = {
    "sf": {"init_nodes": 5, "edges_per_node": 6},
    "er": {"p": 0.024},
    "gr": {"side": 2.0, "radius": 0.18},
}


@dataclass
class ScenarioConfig:
    """Inputs of one scenario.

    ``g1`` / ``g2`` are dicts with a ``family`` key (``sf``, ``er``, ``gr`` or
    ``file``) plus that family's parameters; ``g2`` may carry ``hub`` (node
    index to join to all others, default 0; ``null`` to skip).  ``costs`` is
    ``{"mode": "uniform", "low": .., "high": ..}`` or ``{"mode": "constant",
    "value": ..}``.  ``dependencies`` is ``"complete"`` or a path to a file of
    ``i j`` lines.
    """

    n: int = 500
    m: int = 5000
    g1: dict = field(default_factory=lambda: {"family": "sf", "init_nodes": 5, "edges_per_node": 6})
    g2: dict = field(default_factory=lambda: {"family": "sf", "init_nodes": 5, "edges_per_node": 1, "hub": 0})
    costs: dict = field(default_factory=lambda: {"mode": "uniform", "low": 0.01, "high": 2500.0})
    benefits: tuple = DEFAULT_BENEFITS
    trials: int = 100
    seed: int = 0
    dependencies: str = "complete"
    name: str = ""

    def __post_init__(self):
        if self.trials < 1:
            raise PreconditionError("trials must be at least 1")
        if self.n < 1 or self.m < 1:
            raise PreconditionError("n and m must be at least 1")
        self.benefits = BenefitFunction(self.benefits).table
        mode = self.costs.get("mode")
        if mode not in ("uniform", "constant"):
            raise PreconditionError(f"unknown cost mode {mode!r}")

    @classmethod
    def from_dict(cls, data: dict, base_dir=None) -> "ScenarioConfig":
        known = {f.name for f in fields(cls)}
        unknown = set(data) - known
        if unknown:
            raise PreconditionError(f"unknown config keys: {sorted(unknown)}")
        data = dict(data)
        for key in ("g1", "g2"):
            if key in data and data[key].get("family") == "file" and base_dir is not None:
                data[key] = {**data[key], "path": str(Path(base_dir, data[key]["path"]))}
        if base_dir is not None and data.get("dependencies", "complete") != "complete":
            data["dependencies"] = str(Path(base_dir, data["dependencies"]))
        if "benefits" in data:
            data["benefits"] = tuple(data["benefits"])
        return cls(**data)

    def to_dict(self) -> dict:
        d = asdict(self)
        d["benefits"] = list(self.benefits)
        return d


def load_config(path) -> ScenarioConfig:
    p = Path(path)
    return ScenarioConfig.from_dict(json.loads(p.read_text()), base_dir=p.parent)


def preset(name: str, family: str = "sf", **overrides) -> ScenarioConfig:
    """Shipped presets: ``heterogeneous`` and ``homogeneous`` (first network ``family``)."""
    text = resources.files("indg").joinpath("presets", f"{name}.json").read_text()
    cfg = ScenarioConfig.from_dict(json.loads(text))
    family = family.lower()
    if family not in FAMILY_DEFAULTS:
        raise PreconditionError(f"unknown family {family!r}")
    cfg = replace(cfg, g1={"family": family, **FAMILY_DEFAULTS[family]}, name=f"{name}-{family}")
    return replace(cfg, **overrides) if overrides else cfg


def generate_graph(spec: dict, n: int, seed) -> Graph:
    fam = spec.get("family", "").lower()
    if fam == "sf":
        g = preferential_attachment(n, spec.get("init_nodes", 5), spec.get("edges_per_node", 1), seed)
    elif fam == "er":
        g = erdos_renyi(n, spec["p"], seed)
    elif fam == "gr":
        g = geometric_random(n, spec.get("side", 2.0), spec["radius"], seed)
    elif fam == "file":
        g = read_edge_list(spec["path"])
        if g.node_count != n:
            raise PreconditionError(f"{spec['path']} has {g.node_count} nodes, config expects {n}")
    else:
        raise PreconditionError(f"unknown graph family {fam!r}")
    if spec.get("hub") is not None:
        g = add_hub(g, spec["hub"])
    return g


def trial_streams(seed: int, trial: int):
    """Three independent child seeds (first network, second network, costs) for one trial."""
    return np.random.SeedSequence(seed, spawn_key=(trial,)).spawn(3)


def build_trial_instance(cfg: ScenarioConfig, trial: int) -> GameInstance:
    s1, s2, sc = trial_streams(cfg.seed, trial)
    g1 = generate_graph(cfg.g1, cfg.n, s1)
    g2 = generate_graph(cfg.g2, cfg.m, s2)
    if cfg.costs["mode"] == "uniform":
        costs = sample_costs(cfg.n, cfg.costs["low"], cfg.costs["high"], sc)
    else:
        costs = constant_costs(cfg.n, cfg.costs["value"])
    deps = None
    if cfg.dependencies != "complete":
        deps = [tuple(map(int, line.split()[:2])) for line in Path(cfg.dependencies).read_text().splitlines()
                if line.strip() and not line.lstrip().startswith("#")]
    return GameInstance.build(g1, g2, costs.tolist(), BenefitFunction(cfg.benefits), deps)


@dataclass(frozen=True)
class TrialResult:
    trial: int
    edge_count_g1: int
    diameter_g1: float
    total_interconnection_edges: int
    high_cost_interconnection_edges: int
    avg_distance_interdependent: float
    social_welfare: float
    low_cost_players: int = 0
    builders: int = 0
    unreachable_pairs: int = 0


def profile_statistics(inst: GameInstance, profile: StrategyProfile, hub: int) -> dict:
    """Edge counts, mean finite dependency distance and welfare of a coarse star profile."""
    ev = StarEvaluator(inst, profile, hub)
    m = inst.m
    total_d, pairs, unreachable = 0.0, 0, 0
    welfare = []
    for i in range(inst.n):
        d_hub, d_rest = ev.distances(i)
        for d, count in ((d_hub, 1), (d_rest, m - 1)):
            if count == 0:
                continue
            if math.isfinite(d):
                total_d += d * count
                pairs += count
            else:
                unreachable += count
        welfare.append(ev.utility(i))
    high = sum(len(a) for p, a in zip(inst.players, profile) if classify(p) is CostClass.HIGH)
    return {
        "total_interconnection_edges": profile.edge_count,
        "high_cost_interconnection_edges": high,
        "avg_distance_interdependent": total_d / pairs if pairs else math.nan,
        "unreachable_pairs": unreachable,
        "social_welfare": math.fsum(welfare),
    }


def run_trial(cfg: ScenarioConfig, trial: int) -> TrialResult:
    inst = build_trial_instance(cfg, trial)
    profile, trace = star_nash_equilibrium(inst)
    check = is_nash_equilibrium(inst, profile, mode="star")
    if not check:
        raise VerificationError(
            f"trial {trial}: constructed profile is not an equilibrium (player {check.player} gains {check.gain})"
        )
    stats = profile_statistics(inst, profile, trace.hub)
    return TrialResult(
        trial=trial,
        edge_count_g1=inst.g1.edge_count,
        diameter_g1=diameter(inst.g1) if inst.n >= 2 else 0,
        low_cost_players=len(trace.s_low),
        builders=len(trace.builders),
        **stats,
    )


def _run_trial_args(args):
    return run_trial(*args)


@dataclass(frozen=True)
class ScenarioReport:
    config: ScenarioConfig
    trials: tuple[TrialResult, ...]

    def column(self, name):
        return [getattr(t, name) for t in self.trials]

    def mean(self, name) -> float:
        return float(np.mean(self.column(name)))

    @property
    def disconnected_fraction(self) -> float:
        return float(np.mean([not math.isfinite(d) for d in self.column("diameter_g1")]))

    @property
    def finite_diameter_mean(self) -> float:
        finite = [d for d in self.column("diameter_g1") if math.isfinite(d)]
        return float(np.mean(finite)) if finite else math.nan

    def means(self) -> dict:
        out = {}
        for f in fields(TrialResult):
            if f.name == "trial":
                continue
            if f.name == "diameter_g1":
                out["diameter_g1"] = self.finite_diameter_mean
                out["g1_disconnected"] = self.disconnected_fraction
            else:
                out[f.name] = self.mean(f.name)
        return out


def run_scenario(cfg: ScenarioConfig, workers: int | None = None) -> ScenarioReport:
    """Run every trial (optionally on a process pool); results stay in trial order."""
    jobs = [(cfg, t) for t in range(cfg.trials)]
    if workers and workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_run_trial_args, jobs))
    else:
        results = [run_trial(*job) for job in jobs]
    return ScenarioReport(cfg, tuple(results))


CSV_COLUMNS = [
    "trial",
    "edge_count_g1",
    "diameter_g1",
    "g1_disconnected",
    "total_interconnection_edges",
    "high_cost_interconnection_edges",
    "avg_distance_interdependent",
    "social_welfare",
    "low_cost_players",
    "builders",
    "unreachable_pairs",
]


def _trial_row(t: TrialResult) -> dict:
    row = asdict(t)
    finite = math.isfinite(t.diameter_g1)
    row["diameter_g1"] = t.diameter_g1 if finite else ""
    row["g1_disconnected"] = 0 if finite else 1
    return row


def emit_report(report: ScenarioReport, fmt: str = "csv") -> str:
    """CSV (one row per trial, then a ``mean`` row) or a text table of the means."""
    fmt = fmt.lower()
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.DictWriter(buf, fieldnames=CSV_COLUMNS, lineterminator="\n")
        w.writeheader()
        for t in report.trials:
            w.writerow(_trial_row(t))
        means = report.means()
        mean_row = {k: means.get(k, "") for k in CSV_COLUMNS}
        mean_row["trial"] = "mean"
        if math.isnan(mean_row["diameter_g1"]):
            mean_row["diameter_g1"] = ""
        w.writerow(mean_row)
        return buf.getvalue()
    if fmt == "table":
        return emit_table({report.config.name or "scenario": report})
    raise PreconditionError(f"unknown report format {fmt!r}")


TABLE_ROWS = [
    ("|E1|", lambda r: f"{r.mean('edge_count_g1'):.1f}"),
    ("Diameter of G1", lambda r: _fmt_diameter(r)),
    ("Total Number of Interconnection Edges Constructed", lambda r: f"{r.mean('total_interconnection_edges'):.1f}"),
    ("Interconnection Edges Constructed by High Cost Players", lambda r: f"{r.mean('high_cost_interconnection_edges'):.1f}"),
    ("Average Distance Between Interdependent Nodes", lambda r: f"{r.mean('avg_distance_interdependent'):.2f}"),
    ("Social Welfare of the Interconnected Network", lambda r: f"{r.mean('social_welfare'):.0f}"),
    ("Low Cost Players", lambda r: f"{r.mean('low_cost_players'):.2f}"),
]


def _fmt_diameter(r: ScenarioReport) -> str:
    frac = r.disconnected_fraction
    if frac == 0:
        return f"{r.finite_diameter_mean:.2f}"
    return f"{r.finite_diameter_mean:.2f} ({frac:.0%} disconnected)"


def emit_table(reports: dict) -> str:
    """Metrics as rows, one column per labelled report."""
    labels = list(reports)
    body = [[name] + [fn(reports[k]) for k in labels] for name, fn in TABLE_ROWS]
    header = [""] + labels
    widths = [max(len(str(row[c])) for row in [header] + body) for c in range(len(header))]
    sep = "+" + "+".join("-" * (w + 2) for w in widths) + "+"
    lines = [sep, "| " + " | ".join(str(h).ljust(w) for h, w in zip(header, widths)) + " |", sep]
    for row in body:
        lines.append("| " + " | ".join(str(v).ljust(w) for v, w in zip(row, widths)) + " |")
    lines.append(sep)
    return "\n".join(lines) + "\n"


def format_dot(inst: GameInstance, profile) -> str:
    """Graphviz text: first-network edges solid, second-network dashed, interconnections bold."""
    n = inst.n
    out = ["graph indg {"]
    out.extend(f'  x{i} [label="x{i + 1}", class="v1"];' for i in range(n))
    out.extend(f'  y{j} [label="y{j + 1}", class="v2"];' for j in range(inst.m))
    out.extend(f'  x{u} -- x{v} [class="g1", style=solid];' for u, v in inst.g1.edges())
    out.extend(f'  y{u} -- y{v} [class="g2", style=dashed];' for u, v in inst.g2.edges())
    out.extend(f'  x{i} -- y{j} [class="interconnection", style=bold, color=red];' for i, j in StrategyProfile(profile).edges())
    out.append("}")
    return "\n".join(out) + "\n"


def export_dot(inst: GameInstance, profile, path) -> None:
    try:
        Path(path).write_text(format_dot(inst, profile))
    except OSError as exc:
        raise OSError(f"cannot write DOT file {path}: {exc.strerror}") from exc
