"""Step assignment for the cost-layer edge blocks.

A step is a set of pairwise disjoint edges whose two-qubit blocks run
simultaneously. The traditional strategy is plain greedy edge coloring.
The tree-ordered strategy schedules the spanning-tree edges first, each
strictly after its parent edge, then colors the remaining edges in steps
strictly after every tree edge; this ordering is what licenses dropping
one CNOT per tree edge in the first ansatz layer.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass

from .graphs import Edge, Graph, canonical_edge
from .trees import RootedSpanningTree

TRADITIONAL = "traditional"
TREE_ORDERED = "tree_ordered"


@dataclass
class StepSchedule:
    """Edge -> step map (1-based). num_steps is the max assigned step.

    delayed_start_total counts, over tree edges only, how far each edge's
    step exceeds its child vertex's level: the serialization penalty paid
    when siblings compete for their shared parent.
    """

    strategy: str
    tree: RootedSpanningTree | None
    step_of: dict[Edge, int]
    num_steps: int
    delayed_start_total: int = 0

    def tree_steps(self) -> int:
        """Max step over tree edges (0 for the traditional strategy)."""
        if self.tree is None:
            return 0
        return max(self.step_of[e] for e in self.tree.edge_set())


def _greedy_color(edges: list[Edge], used_at: list[set[int]], start: int) -> dict[Edge, int]:
    """Assign each edge the smallest step >= start free at both endpoints."""
    assignment: dict[Edge, int] = {}
    for u, v in edges:
        s = start
        while s in used_at[u] or s in used_at[v]:
            s += 1
        used_at[u].add(s)
        used_at[v].add(s)
        assignment[(u, v)] = s
    return assignment


def schedule_traditional(g: Graph) -> StepSchedule:
    """Greedy edge coloring in canonical edge order."""
    used_at: list[set[int]] = [set() for _ in range(g.n)]
    step_of = _greedy_color(list(g.edges), used_at, start=1)
    return StepSchedule(
        strategy=TRADITIONAL,
        tree=None,
        step_of=step_of,
        num_steps=max(step_of.values()),
    )


def schedule_tree_ordered(g: Graph, t: RootedSpanningTree) -> StepSchedule:
    """Two-phase schedule: tree edges in discovery order, then the rest.

    Each tree edge (u, v) takes the smallest step strictly greater than the
    step of u's own parent edge (>= 1 for edges out of the root) that is
    conflict-free at both endpoints. Non-tree edges are then colored
    greedily starting just past the last tree step.
    """
    tree_edges = t.edge_set()
    if t.n != g.n or not tree_edges <= set(g.edges):
        raise ValueError("tree does not span this graph")

    used_at: list[set[int]] = [set() for _ in range(g.n)]
    step_of: dict[Edge, int] = {}
    edge_step_of_child: dict[int, int] = {}  # child vertex -> its tree edge's step
    delayed = 0
    for u, v in t.discovery_order:
        floor = edge_step_of_child.get(u, 0)  # 0 when u is the root
        s = floor + 1
        while s in used_at[u] or s in used_at[v]:
            s += 1
        used_at[u].add(s)
        used_at[v].add(s)
        step_of[canonical_edge(u, v)] = s
        edge_step_of_child[v] = s
        delayed += s - t.level[v]

    max_tree_step = max(step_of.values())
    rest = [e for e in g.edges if e not in tree_edges]
    step_of.update(_greedy_color(rest, used_at, start=max_tree_step + 1))

    return StepSchedule(
        strategy=TREE_ORDERED,
        tree=t,
        step_of=step_of,
        num_steps=max(step_of.values()),
        delayed_start_total=delayed,
    )


def verify_schedule(g: Graph, sched: StepSchedule) -> list[str]:
    """Independent legality check; returns human-readable violations.

    Checks that every graph edge has a step, that edges sharing a vertex
    never share a step, and (for tree-ordered schedules) that no tree edge
    reuses a step of any of its tree ancestors and that every non-tree edge
    comes strictly after the whole tree phase. Never raises.
    """
    violations: list[str] = []
    missing = set(g.edges) - set(sched.step_of)
    for e in sorted(missing):
        violations.append(f"edge {e} has no step")
    extra = set(sched.step_of) - set(g.edges)
    for e in sorted(extra):
        violations.append(f"scheduled edge {e} not in graph")

    scheduled = [e for e in g.edges if e in sched.step_of]
    by_step: dict[int, list[Edge]] = defaultdict(list)
    for e in scheduled:
        by_step[sched.step_of[e]].append(e)
    for s in sorted(by_step):
        owner: dict[int, Edge] = {}
        for e in by_step[s]:
            for vtx in e:
                if vtx in owner:
                    violations.append(
                        f"incident edges {owner[vtx]} and {e} share step {s}"
                    )
                else:
                    owner[vtx] = e

    if sched.strategy == TREE_ORDERED:
        t = sched.tree
        if t is None:
            violations.append("tree_ordered schedule is missing its tree")
            return violations
        tree_edges = t.edge_set()
        if not tree_edges <= set(sched.step_of):
            violations.append("tree edge missing from schedule")
            return violations
        # ancestor chain of a tree edge (u, v): the tree edges on the
        # root-to-u path
        for u, v in t.discovery_order:
            e = canonical_edge(u, v)
            node = u
            while t.parent[node] is not None:
                p = t.parent[node]
                anc = canonical_edge(p, node)
                if sched.step_of[anc] == sched.step_of[e]:
                    violations.append(
                        f"tree edge {e} reuses step {sched.step_of[e]} "
                        f"of its ancestor {anc}"
                    )
                node = p
        max_tree_step = max(sched.step_of[e] for e in tree_edges)
        for e in scheduled:
            if e not in tree_edges and sched.step_of[e] <= max_tree_step:
                violations.append(
                    f"non-tree edge {e} at step {sched.step_of[e]} does not "
                    f"follow the tree phase (last tree step {max_tree_step})"
                )
    return violations


def schedule_to_text(g: Graph, sched: StepSchedule) -> str:
    """Dump format: one line "u v step tree|nontree" per edge."""
    tree_edges = sched.tree.edge_set() if sched.tree is not None else frozenset()
    lines = []
    for e in g.edges:
        kind = "tree" if e in tree_edges else "nontree"
        lines.append(f"{e[0]} {e[1]} {sched.step_of[e]} {kind}")
    return "\n".join(lines) + "\n"
