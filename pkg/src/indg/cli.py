"""Command-line front end (``indg`` / ``python -m indg``).

Exit codes: 0 success, 1 negative answer (not an equilibrium, reduction mismatch)
or unexpected library error, 2 usage error,
3 precondition, 4 capacity, 5 parse, 6 verification failure, 7 I/O.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from dataclasses import replace
from pathlib import Path

from .best_response import brute_force_best_response, is_nash_equilibrium, star_best_response
from .equilibrium import free_rider_report, star_nash_equilibrium
from .errors import IndgError
from .game import StrategyProfile, l_radius, player_utility, r_radius, social_welfare
from .graph_core import find_hub
from .hardness import decide_bri_brute, decide_dominating_set_brute, reduce_dominating_set
from .io import format_edge_list, format_instance, format_profile, read_edge_list, read_instance, read_profile
from .random_graphs import add_hub, erdos_renyi, geometric_random, preferential_attachment
from .simulation import emit_report, export_dot, load_config, preset, run_scenario
from .welfare import price_of_anarchy

EXIT_IO = 7


def _json_default(x):
    if isinstance(x, frozenset):
        return sorted(x)
    raise TypeError(type(x).__name__)


def _radius(x):
    return "inf" if x == math.inf else x


def _emit(text: str, out):
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _dump(obj, out):
    _emit(json.dumps(obj, indent=2, default=_json_default) + "\n", out)


def cmd_simulate(args):
    if Path(args.config).exists():
        cfg = load_config(args.config)
    else:
        name, _, family = args.config.partition(":")
        cfg = preset(name, family or "sf")
    if args.seed is not None:
        cfg = replace(cfg, seed=args.seed)
    if args.trials is not None:
        cfg = replace(cfg, trials=args.trials)
    report = run_scenario(cfg, workers=args.workers)
    _emit(emit_report(report, args.format), args.out)


def cmd_equilibrium(args):
    inst = read_instance(args.instance)
    profile, trace = star_nash_equilibrium(inst)
    if args.dot:
        export_dot(inst, profile, args.dot)
    if args.format == "profile":
        _emit(format_profile(profile), args.out)
        return
    _dump(
        {
            "profile": {str(i): sorted(a) for i, a in enumerate(profile) if a},
            "welfare": social_welfare(inst, profile),
            "trace": trace.to_dict(),
            "status": {str(i): str(s) for i, s in free_rider_report(trace).items()},
        },
        args.out,
    )


def cmd_best_response(args):
    inst = read_instance(args.instance)
    profile = read_profile(args.profile, inst.n) if args.profile else StrategyProfile.empty(inst.n)
    if args.mode == "star":
        res = star_best_response(inst, profile, args.player)
    else:
        res = brute_force_best_response(inst, profile, args.player, budget=args.budget)
    p = inst.players[args.player]
    out = res.to_dict()
    out.update(l_radius=_radius(l_radius(p, inst.m)), r_radius=_radius(r_radius(p, inst.m)))
    _dump(out, args.out)


def cmd_verify_ne(args):
    inst = read_instance(args.instance)
    profile = read_profile(args.profile, inst.n)
    check = is_nash_equilibrium(inst, profile, mode=args.mode, budget=args.budget)
    out = {
        "is_equilibrium": check.is_equilibrium,
        "welfare": social_welfare(inst, profile),
        "utilities": [player_utility(inst, profile, i) for i in range(inst.n)],
    }
    if not check:
        out.update(player=check.player, better_action=sorted(check.better_action), gain=check.gain)
    _dump(out, args.out)
    return 0 if check else 1


def cmd_poa(args):
    res = price_of_anarchy(read_instance(args.instance), max_exponent=args.max_exponent)
    _dump(res.to_dict(), args.out)


def cmd_reduce_ds(args):
    g = read_edge_list(args.graph)
    bri = reduce_dominating_set(g, args.k)
    header = [f"reduced from dominating set with k={args.k}", f"threshold {bri.threshold!r}"]
    if args.check:
        ds, br = decide_dominating_set_brute(g, args.k), decide_bri_brute(bri)
        header.append(f"dominating set {'yes' if ds else 'no'}, best response {'yes' if br else 'no'}")
        if ds != br:
            _emit(format_instance(bri.game, header), args.out)
            return 1
    _emit(format_instance(bri.game, header), args.out)


def cmd_gen(args):
    seed = 0 if args.seed is None else args.seed
    if args.family == "sf":
        g = preferential_attachment(args.n, args.init_nodes, args.edges_per_node, seed)
    elif args.family == "er":
        g = erdos_renyi(args.n, args.p, seed)
    else:
        g = geometric_random(args.n, args.side, args.radius, seed)
    if args.hub is not None:
        g = add_hub(g, args.hub)
    header = [f"{args.family} n={args.n} seed={seed}"]
    if find_hub(g) is not None:
        header.append(f"hub {find_hub(g)}")
    _emit(format_edge_list(g, header), args.out)


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="indg", description="Interconnection network design game toolkit.")
    sub = ap.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--out", help="write output here instead of stdout")
        return p

    p = common(sub.add_parser("simulate", help="run a scenario config (file or preset name[:family])"))
    p.add_argument("config", help="JSON config path, or heterogeneous|homogeneous[:sf|er|gr]")
    p.add_argument("--seed", type=int)
    p.add_argument("--trials", type=int)
    p.add_argument("--format", choices=["csv", "table"], default="csv")
    p.add_argument("--workers", type=int, default=1)
    p.set_defaults(func=cmd_simulate)

    p = common(sub.add_parser("equilibrium", help="construct an equilibrium on a star instance"))
    p.add_argument("instance")
    p.add_argument("--format", choices=["json", "profile"], default="json")
    p.add_argument("--dot", help="also write a Graphviz file of the result")
    p.set_defaults(func=cmd_equilibrium)

    p = common(sub.add_parser("best-response", help="best response of one player"))
    p.add_argument("instance")
    p.add_argument("--player", type=int, required=True)
    p.add_argument("--profile", help="actions of the other players (default: all empty)")
    p.add_argument("--mode", choices=["brute_force", "star"], default="brute_force")
    p.add_argument("--budget", type=int, default=2**20)
    p.set_defaults(func=cmd_best_response)

    p = common(sub.add_parser("verify-ne", help="check a profile for profitable deviations"))
    p.add_argument("instance")
    p.add_argument("profile")
    p.add_argument("--mode", choices=["brute_force", "star"], default="brute_force")
    p.add_argument("--budget", type=int, default=2**20)
    p.set_defaults(func=cmd_verify_ne)

    p = common(sub.add_parser("poa", help="price of anarchy by exhaustive enumeration"))
    p.add_argument("instance")
    p.add_argument("--max-exponent", type=int, default=16)
    p.set_defaults(func=cmd_poa)

    p = common(sub.add_parser("reduce-ds", help="turn a dominating-set question into a best-response instance"))
    p.add_argument("graph")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--check", action="store_true", help="solve both sides by brute force and compare")
    p.set_defaults(func=cmd_reduce_ds)

    p = common(sub.add_parser("gen", help="generate a random graph as an edge list"))
    p.add_argument("family", choices=["sf", "er", "gr"])
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--seed", type=int)
    p.add_argument("--init-nodes", type=int, default=5)
    p.add_argument("--edges-per-node", type=int, default=1)
    p.add_argument("--p", type=float, default=0.024)
    p.add_argument("--side", type=float, default=2.0)
    p.add_argument("--radius", type=float, default=0.18)
    p.add_argument("--hub", type=int, help="join this node to all others")
    p.set_defaults(func=cmd_gen)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args) or 0
    except IndgError as exc:
        print(f"indg: {type(exc).__name__}: {exc}", file=sys.stderr)
        return exc.exit_code
    except OSError as exc:
        print(f"indg: I/O error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
