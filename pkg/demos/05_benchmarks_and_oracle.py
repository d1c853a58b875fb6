"""Benchmark driver and the exact oracle.

A desk-scale version of the headline experiment: how fast does the
tree-phase step count grow with n for different branching caps B? The
DFS worst case is the n-1 chain (slope 1); the greedy trees flatten that
substantially, and more so for larger B. The exact oracle then shows how
far the heuristic sits from the true optimum on tiny graphs.
"""

from treeqaoa import (
    ExperimentConfig,
    HeuristicConfig,
    fit_slope,
    generate_erdos_renyi,
    heuristic_gap,
    run_depth_experiment,
    rows_to_csv,
    solve_exact,
)
from treeqaoa.bench import DEPTH_COLUMNS

cfg = ExperimentConfig(
    family="erdos_renyi", p_edge=0.5, n_values=(20, 35, 50, 65, 80),
    trials=8, seed=0, strategies=("greedy",), B_values=(3, 6, 10),
)
rows = run_depth_experiment(cfg)

print("tree-phase step slope vs n (ER p=0.5, 8 instances):")
print(f"  worst-case chain: slope {fit_slope([(n, n - 1) for n in cfg.n_values])[0]:.3f}")
for B in cfg.B_values:
    pts = [(r["n"], r["mean_tree_steps"]) for r in rows if r["B"] == B]
    slope, _ = fit_slope(pts)
    print(f"  greedy B={B:>2}:      slope {slope:.3f}")

print("\nfirst CSV rows (schema v1):")
print("\n".join(rows_to_csv(rows, DEPTH_COLUMNS).splitlines()[:4]))

# exact optimum on tiny instances: enumerate every rooted spanning tree
print("\nheuristic vs exact optimum (B=3):")
for seed in range(5):
    g = generate_erdos_renyi(6, 0.5, seed=100 + seed)
    h, o = heuristic_gap(g, 0, HeuristicConfig(B=3))
    trees = solve_exact(g, 0).trees_enumerated
    print(f"  seed {100 + seed}: m={g.m}, heuristic {h} vs optimum {o} "
          f"({trees} spanning trees searched)")
