"""Gate-level ansatz circuits for Max-Cut, traditional and CNOT-reduced.

The ansatz is H on every qubit, then p layers of (cost layer, mixer layer).
The traditional cost block for an edge (j, k) is CNOT(j, k), RZ(k, 2*gamma),
CNOT(j, k), which realizes exp(-i*gamma*Z_j*Z_k) exactly (the constant term
of the edge Hamiltonian only contributes a global phase, which we drop).
The mixer is RX(q, 2*beta) on every qubit.

The reduced builder drops the leading CNOT of every spanning-tree edge in
layer 1, emitting RZ(child, 2*gamma_1) then CNOT(parent, child): with the
tree-ordered schedule, the child qubit is still in |+> when the dropped
CNOT would have fired, so it acted as the identity. Non-tree edges and all
layers past the first keep the full three-gate block, so the saving is
exactly n-1 CNOTs regardless of p.

Depth here is architecture-independent logical depth: the longest chain of
gates that pairwise share a qubit, each gate counting 1.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graphs import Edge, Graph
from .scheduling import TRADITIONAL, TREE_ORDERED, StepSchedule, verify_schedule
from .trees import RootedSpanningTree

# provenance tags
INIT = "init"
COST = "cost"
MIXER = "mixer"


@dataclass(frozen=True)
class Gate:
    """One gate: name in {H, RZ, RX, CX}, qubit tuple, optional angle.

    tag records provenance: ("init",), ("cost", layer, edge) or
    ("mixer", layer).
    """

    name: str
    qubits: tuple[int, ...]
    angle: float | None = None
    tag: tuple = (INIT,)


@dataclass(frozen=True)
class AnsatzParams:
    """Layer count p with per-layer cost angles (gammas) and mixer angles."""

    p: int
    gammas: tuple[float, ...]
    betas: tuple[float, ...]

    def __post_init__(self) -> None:
        if self.p < 1:
            raise ValueError(f"p must be >= 1, got {self.p}")
        if len(self.gammas) != self.p or len(self.betas) != self.p:
            raise ValueError(
                f"need {self.p} gammas and betas, got "
                f"{len(self.gammas)} and {len(self.betas)}"
            )


class CircuitIR:
    """Immutable ordered gate list over n_qubits."""

    __slots__ = ("n_qubits", "gates")

    def __init__(self, n_qubits: int, gates: list[Gate] | tuple[Gate, ...]):
        for gate in gates:
            if any(not 0 <= q < n_qubits for q in gate.qubits):
                raise ValueError(f"gate {gate} out of range for {n_qubits} qubits")
            if gate.name == "CX" and gate.qubits[0] == gate.qubits[1]:
                raise ValueError(f"CX control equals target in {gate}")
        self.n_qubits = n_qubits
        self.gates: tuple[Gate, ...] = tuple(gates)

    def depth(self) -> int:
        """Longest dependency chain; gates conflict iff they share a qubit."""
        frontier = [0] * self.n_qubits
        for gate in self.gates:
            lvl = 1 + max(frontier[q] for q in gate.qubits)
            for q in gate.qubits:
                frontier[q] = lvl
        return max(frontier, default=0) if self.n_qubits else 0

    def cnot_count(self) -> int:
        return sum(1 for gate in self.gates if gate.name == "CX")

    def to_text(self) -> str:
        """Dump format: header "n_qubits k", then one gate per line."""
        lines = [f"{self.n_qubits} {len(self.gates)}"]
        for gate in self.gates:
            if gate.name == "H":
                lines.append(f"H {gate.qubits[0]}")
            elif gate.name in ("RZ", "RX"):
                lines.append(f"{gate.name} {gate.qubits[0]} {gate.angle!r}")
            else:
                lines.append(f"CX {gate.qubits[0]} {gate.qubits[1]}")
        return "\n".join(lines) + "\n"

    def __len__(self) -> int:
        return len(self.gates)


def _edges_by_step(g: Graph, sched: StepSchedule) -> list[tuple[int, list[Edge]]]:
    if set(sched.step_of) != set(g.edges):
        raise ValueError("schedule does not cover exactly the graph's edges")
    steps: dict[int, list[Edge]] = {}
    for e in g.edges:
        steps.setdefault(sched.step_of[e], []).append(e)
    return [(s, sorted(steps[s])) for s in sorted(steps)]


def _full_block(gates: list[Gate], j: int, k: int, gamma: float, layer: int) -> None:
    tag = (COST, layer, (j, k))
    gates.append(Gate("CX", (j, k), tag=tag))
    gates.append(Gate("RZ", (k,), 2.0 * gamma, tag=tag))
    gates.append(Gate("CX", (j, k), tag=tag))


def _init_and_layers(g: Graph, params: AnsatzParams, by_step, layer_one_emit) -> CircuitIR:
    gates: list[Gate] = [Gate("H", (q,)) for q in range(g.n)]
    for layer in range(1, params.p + 1):
        gamma = params.gammas[layer - 1]
        for _step, edges in by_step:
            for j, k in edges:
                if layer == 1:
                    layer_one_emit(gates, j, k, gamma)
                else:
                    _full_block(gates, j, k, gamma, layer)
        beta = params.betas[layer - 1]
        for q in range(g.n):
            gates.append(Gate("RX", (q,), 2.0 * beta, tag=(MIXER, layer)))
    return CircuitIR(g.n, gates)


def build_traditional(g: Graph, params: AnsatzParams, sched: StepSchedule) -> CircuitIR:
    """Full three-gate block for every edge, in schedule-step order."""
    if sched.strategy != TRADITIONAL:
        raise ValueError(f"expected a traditional schedule, got {sched.strategy!r}")
    by_step = _edges_by_step(g, sched)

    def emit(gates: list[Gate], j: int, k: int, gamma: float) -> None:
        _full_block(gates, j, k, gamma, 1)

    return _init_and_layers(g, params, by_step, emit)


def build_optimized(g: Graph, params: AnsatzParams, t: RootedSpanningTree,
                    sched: StepSchedule) -> CircuitIR:
    """Reduced circuit: layer-1 tree edges lose their leading CNOT.

    Tree edges are oriented parent -> child (control -> target); the
    schedule must be tree-ordered over t and pass verification, since the
    reduction is only sound under that edge ordering.
    """
    if sched.strategy != TREE_ORDERED or sched.tree is not t:
        raise ValueError("schedule is not a tree_ordered schedule over this tree")
    violations = verify_schedule(g, sched)
    if violations:
        raise ValueError(f"schedule fails verification: {violations[0]}")
    by_step = _edges_by_step(g, sched)
    oriented = {}  # canonical tree edge -> (parent, child)
    for u, v in t.discovery_order:
        oriented[(u, v) if u < v else (v, u)] = (u, v)

    def emit(gates: list[Gate], j: int, k: int, gamma: float) -> None:
        if (j, k) in oriented:
            par, child = oriented[(j, k)]
            tag = (COST, 1, (j, k))
            gates.append(Gate("RZ", (child,), 2.0 * gamma, tag=tag))
            gates.append(Gate("CX", (par, child), tag=tag))
        else:
            _full_block(gates, j, k, gamma, 1)

    return _init_and_layers(g, params, by_step, emit)
