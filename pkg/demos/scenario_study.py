"""A scaled-down version of the random-network study, then one full-size trial.

Runs both cost settings on all three families with 10 trials at n=100,
m=1000 (costs scaled by m/5000 so building stays worthwhile), prints the
comparison table and writes the CSV and a DOT picture of one equilibrium
into demos/output/.
"""

from dataclasses import replace
from pathlib import Path

from indg import star_nash_equilibrium
from indg.simulation import build_trial_instance, emit_report, emit_table, export_dot, preset, run_scenario, run_trial

out = Path(__file__).with_name("output")
out.mkdir(exist_ok=True)

reports = {}
for mode in ("heterogeneous", "homogeneous"):
    for fam in ("sf", "er", "gr"):
        cfg = replace(preset(mode, fam), n=100, m=1000, trials=10)
        scale = cfg.m / 5000
        cfg = replace(cfg, costs={k: v * scale if k != "mode" else v for k, v in cfg.costs.items()})
        if fam == "er":
            cfg = replace(cfg, g1={"family": "er", "p": 0.12})
        if fam == "gr":
            cfg = replace(cfg, g1={"family": "gr", "side": 2.0, "radius": 0.4})
        reports[f"{mode[:3]}-{fam}"] = run_scenario(cfg)
print(emit_table(reports))
(out / "hom-sf.csv").write_text(emit_report(reports["hom-sf"], "csv"))

small = replace(preset("homogeneous"), n=12, m=8, g1={"family": "sf", "init_nodes": 2, "edges_per_node": 1},
    costs={"mode": "constant", "value": 3.0}, trials=1)
inst = build_trial_instance(small, 0)
profile, trace = star_nash_equilibrium(inst)
export_dot(inst, profile, out / "small.dot")
print(f"wrote {out / 'hom-sf.csv'} and {out / 'small.dot'} (builders {[i + 1 for i in trace.builders]})")

t = run_trial(preset("homogeneous"), 0)
print(f"\nfull-size homogeneous trial: {t.builders} builders, mean distance {t.avg_distance_interdependent:.3f}, welfare {t.social_welfare:.0f}")
