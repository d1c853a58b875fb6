"""Command-line front end.

Subcommands: gen, tree, schedule, circuit, simulate, bench-depth,
bench-success, oracle. Graphs travel as edge-list files ("n m" header then
"u v" lines). All output is deterministic for fixed flags and seed; results
go to --out when given, else stdout. Exit code 0 on success, 1 on any
validation failure.
"""

from __future__ import annotations

import argparse
import sys

import numpy as np

from .bench import (
    DEPTH_COLUMNS,
    SUCCESS_COLUMNS,
    ExperimentConfig,
    run_depth_experiment,
    run_success_experiment,
    rows_to_csv,
)
from .circuits import AnsatzParams, build_optimized, build_traditional
from .graphs import (
    Graph,
    GraphError,
    generate_complete,
    generate_cycle,
    generate_erdos_renyi,
    read_edge_list,
    write_edge_list,
)
from .oracle import OracleBudgetError, heuristic_gap, solve_exact
from .scheduling import (
    schedule_to_text,
    schedule_traditional,
    schedule_tree_ordered,
)
from .simulate import NoiseParams, run_noisy
from .trees import (
    HeuristicConfig,
    build_bfs_tree,
    build_dfs_tree,
    build_greedy_tree,
    tree_to_text,
)

_TREE_METHODS = {
    "dfs": lambda g, root, B: build_dfs_tree(g, root),
    "bfs": lambda g, root, B: build_bfs_tree(g, root),
    "greedy": lambda g, root, B: build_greedy_tree(g, root, HeuristicConfig(B=B)),
}


def _emit(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)


def _load_graph(path: str) -> Graph:
    with open(path, encoding="utf-8") as fh:
        return read_edge_list(fh.read())


def _parse_noise(text: str) -> NoiseParams:
    parts = text.split(",")
    if len(parts) != 3:
        raise ValueError(f"--noise expects 'p_cx,p_1q,p_idle', got {text!r}")
    return NoiseParams(*(float(x) for x in parts))


def _parse_int_list(text: str) -> tuple[int, ...]:
    return tuple(int(x) for x in text.split(","))


def _ansatz_params(args) -> AnsatzParams:
    if args.gamma is not None or args.beta is not None:
        if args.gamma is None or args.beta is None:
            raise ValueError("--gamma and --beta must be given together")
        gammas = tuple(float(x) for x in args.gamma.split(","))
        betas = tuple(float(x) for x in args.beta.split(","))
        return AnsatzParams(p=len(gammas), gammas=gammas, betas=betas)
    rng = np.random.default_rng(args.angle_seed)
    angles = rng.uniform(0.0, 2.0 * np.pi, size=2 * args.p)
    return AnsatzParams(
        p=args.p,
        gammas=tuple(float(a) for a in angles[:args.p]),
        betas=tuple(float(a) for a in angles[args.p:]),
    )


def _strategy_schedule(g: Graph, strategy: str, root: int, B: int):
    if strategy == "traditional":
        return schedule_traditional(g)
    tree = _TREE_METHODS[strategy](g, root, B)
    return schedule_tree_ordered(g, tree)


def _cmd_gen(args) -> None:
    if args.family == "erdos-renyi":
        g = generate_erdos_renyi(args.n, args.p_edge, args.seed)
    elif args.family == "complete":
        g = generate_complete(args.n)
    else:
        g = generate_cycle(args.n)
    _emit(write_edge_list(g), args.out)


def _cmd_tree(args) -> None:
    g = _load_graph(args.graph)
    tree = _TREE_METHODS[args.strategy](g, args.root, args.B)
    _emit(tree_to_text(tree), args.out)


def _cmd_schedule(args) -> None:
    g = _load_graph(args.graph)
    sched = _strategy_schedule(g, args.strategy, args.root, args.B)
    _emit(schedule_to_text(g, sched), args.out)


def _cmd_circuit(args) -> None:
    g = _load_graph(args.graph)
    params = _ansatz_params(args)
    sched = _strategy_schedule(g, args.strategy, args.root, args.B)
    if sched.tree is None:
        circ = build_traditional(g, params, sched)
    else:
        circ = build_optimized(g, params, sched.tree, sched)
    _emit(circ.to_text(), args.out)


def _cmd_simulate(args) -> None:
    g = _load_graph(args.graph)
    params = _ansatz_params(args)
    sched = _strategy_schedule(g, args.strategy, args.root, args.B)
    if sched.tree is None:
        circ = build_traditional(g, params, sched)
    else:
        circ = build_optimized(g, params, sched.tree, sched)
    noise = _parse_noise(args.noise)
    result = run_noisy(circ, sched, noise)
    lines = [
        "strategy,n,m,num_steps,cnot_count,gate_depth,p_success",
        ",".join([
            args.strategy, str(g.n), str(g.m), str(sched.num_steps),
            str(circ.cnot_count()), str(circ.depth()),
            f"{result.p_success:.12f}",
        ]),
    ]
    _emit("\n".join(lines) + "\n", args.out)


def _bench_config(args) -> ExperimentConfig:
    family = args.family.replace("-", "_")
    return ExperimentConfig(
        family=family,
        n_values=_parse_int_list(args.n),
        B_values=_parse_int_list(args.B),
        p_edge=args.p_edge,
        trials=args.trials,
        seed=args.seed,
        strategies=tuple(args.strategy.split(",")),
        noise=_parse_noise(args.noise) if getattr(args, "noise", None) else None,
        average_over_roots=args.average_over_roots,
    )


def _cmd_bench_depth(args) -> None:
    rows = run_depth_experiment(_bench_config(args))
    _emit(rows_to_csv(rows, DEPTH_COLUMNS), args.out)


def _cmd_bench_success(args) -> None:
    rows = run_success_experiment(_bench_config(args))
    _emit(rows_to_csv(rows, SUCCESS_COLUMNS), args.out)


def _cmd_oracle(args) -> None:
    g = _load_graph(args.graph)
    result = solve_exact(g, args.root)
    heuristic_steps, oracle_steps = heuristic_gap(
        g, args.root, HeuristicConfig(B=args.B)
    )
    lines = [
        f"best_steps {oracle_steps}",
        f"heuristic_steps {heuristic_steps}",
        f"trees_enumerated {result.trees_enumerated}",
    ]
    text = "\n".join(lines) + "\n" + schedule_to_text(g, result.witness_schedule)
    _emit(text, args.out)


def _add_graph_arg(p: argparse.ArgumentParser) -> None:
    p.add_argument("graph", help="edge-list file ('n m' header, then 'u v' lines)")


def _add_strategy_args(p: argparse.ArgumentParser, choices) -> None:
    p.add_argument("--strategy", choices=choices, default="greedy")
    p.add_argument("--root", type=int, default=0)
    p.add_argument("--B", type=int, default=3)


def _add_angle_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--p", type=int, default=1, help="ansatz layer count")
    p.add_argument("--gamma", help="comma-separated cost angles (radians)")
    p.add_argument("--beta", help="comma-separated mixer angles (radians)")
    p.add_argument("--angle-seed", type=int, default=1,
                   help="seed for random angles when --gamma/--beta absent")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="treeqaoa",
        description="Low-depth CNOT-reduced Max-Cut ansatz synthesis toolkit",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="generate a graph and write its edge list")
    p.add_argument("--family", choices=("erdos-renyi", "complete", "cycle"),
                   required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--p-edge", type=float, default=0.5)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out")
    p.set_defaults(func=_cmd_gen)

    p = sub.add_parser("tree", help="build a rooted spanning tree")
    _add_graph_arg(p)
    p.add_argument("--strategy", choices=("dfs", "bfs", "greedy"), default="greedy")
    p.add_argument("--root", type=int, default=0)
    p.add_argument("--B", type=int, default=3)
    p.add_argument("--out")
    p.set_defaults(func=_cmd_tree)

    p = sub.add_parser("schedule", help="assign edge blocks to steps")
    _add_graph_arg(p)
    _add_strategy_args(p, ("traditional", "dfs", "bfs", "greedy"))
    p.add_argument("--out")
    p.set_defaults(func=_cmd_schedule)

    p = sub.add_parser("circuit", help="emit the gate-level ansatz circuit")
    _add_graph_arg(p)
    _add_strategy_args(p, ("traditional", "dfs", "bfs", "greedy"))
    _add_angle_args(p)
    p.add_argument("--out")
    p.set_defaults(func=_cmd_circuit)

    p = sub.add_parser("simulate", help="noisy density-matrix run")
    _add_graph_arg(p)
    _add_strategy_args(p, ("traditional", "dfs", "bfs", "greedy"))
    _add_angle_args(p)
    p.add_argument("--noise", default="0.01,0.001,0.002",
                   help="p_cx,p_1q,p_idle")
    p.add_argument("--out")
    p.set_defaults(func=_cmd_simulate)

    p = sub.add_parser("bench-depth", help="steps/depth sweep to CSV")
    p.add_argument("--family", choices=("erdos-renyi", "complete", "cycle"),
                   required=True)
    p.add_argument("--p-edge", type=float, default=None)
    p.add_argument("--n", required=True, help="comma-separated vertex counts")
    p.add_argument("--B", default="3", help="comma-separated B values")
    p.add_argument("--trials", type=int, default=20)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--strategy", default="traditional,dfs,greedy",
                   help="comma-separated subset of traditional,dfs,greedy")
    p.add_argument("--average-over-roots", action="store_true")
    p.add_argument("--out")
    p.set_defaults(func=_cmd_bench_depth)

    p = sub.add_parser("bench-success", help="success-probability sweep to CSV")
    p.add_argument("--family", choices=("erdos-renyi", "complete", "cycle"),
                   required=True)
    p.add_argument("--p-edge", type=float, default=None)
    p.add_argument("--n", required=True, help="comma-separated vertex counts")
    p.add_argument("--B", default="3", help="comma-separated B values")
    p.add_argument("--trials", type=int, default=10)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--strategy", default="traditional,dfs,greedy")
    p.add_argument("--noise", default="0.01,0.001,0.002",
                   help="p_cx,p_1q,p_idle")
    p.add_argument("--average-over-roots", action="store_true")
    p.add_argument("--out")
    p.set_defaults(func=_cmd_bench_success)

    p = sub.add_parser("oracle", help="exact minimum steps on a tiny graph")
    _add_graph_arg(p)
    p.add_argument("--root", type=int, default=0)
    p.add_argument("--B", type=int, default=3)
    p.add_argument("--out")
    p.set_defaults(func=_cmd_oracle)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        args.func(args)
    except (GraphError, ValueError, OracleBudgetError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
