"""Undirected simple connected graphs: representation, generators, edge-list I/O.

Vertices are dense 0-based integers. Edges are stored canonically as (u, v)
with u < v, sorted. All algorithms in this package assume the graph is
connected; the constructor enforces it.

Randomness comes from numpy's ``default_rng`` (PCG64), so any generator
output is reproducible across platforms for a fixed seed.
"""

from __future__ import annotations

import logging
from collections import deque
from typing import Iterable

import numpy as np

logger = logging.getLogger(__name__)

Edge = tuple[int, int]


class GraphError(ValueError):
    """Raised for malformed, disconnected, or otherwise invalid graph input."""


def canonical_edge(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


class Graph:
    """Immutable undirected simple connected graph.

    Attributes:
        n: vertex count; vertices are 0..n-1.
        edges: sorted tuple of canonical (u, v) pairs, u < v.
        adjacency: per-vertex tuple of sorted neighbors.
    """

    __slots__ = ("n", "edges", "adjacency")

    def __init__(self, n: int, edges: Iterable[Edge]):
        if n < 2:
            raise GraphError(f"need at least 2 vertices, got n={n}")
        seen: set[Edge] = set()
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            e = canonical_edge(u, v)
            if e in seen:
                raise GraphError(f"duplicate edge ({e[0]}, {e[1]})")
            seen.add(e)
        self.n = n
        self.edges: tuple[Edge, ...] = tuple(sorted(seen))
        adj: list[list[int]] = [[] for _ in range(n)]
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        self.adjacency: tuple[tuple[int, ...], ...] = tuple(
            tuple(sorted(a)) for a in adj
        )
        if not edges_connected(n, self.edges):
            raise GraphError("graph is not connected")

    @property
    def m(self) -> int:
        return len(self.edges)

    @property
    def max_degree(self) -> int:
        return max(len(a) for a in self.adjacency)

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Graph)
            and self.n == other.n
            and self.edges == other.edges
        )

    def __hash__(self) -> int:
        return hash((self.n, self.edges))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


def edges_connected(n: int, edges: Iterable[Edge]) -> bool:
    """BFS reachability check: does the edge set connect all n vertices?"""
    adj: list[list[int]] = [[] for _ in range(n)]
    for u, v in edges:
        adj[u].append(v)
        adj[v].append(u)
    seen = [False] * n
    seen[0] = True
    queue = deque([0])
    count = 1
    while queue:
        u = queue.popleft()
        for w in adj[u]:
            if not seen[w]:
                seen[w] = True
                count += 1
                queue.append(w)
    return count == n


def generate_erdos_renyi(n: int, p_edge: float, seed: int) -> Graph:
    """Sample a connected G(n, p) graph.

    Each vertex pair is included independently with probability ``p_edge``.
    Disconnected samples are rejected and redrawn from the advancing PCG64
    stream, so the result follows the G(n, p) distribution conditioned on
    connectivity. Deterministic for fixed (n, p_edge, seed).
    """
    if n < 2:
        raise GraphError(f"need at least 2 vertices, got n={n}")
    if not 0.0 < p_edge <= 1.0:
        raise GraphError(f"p_edge must be in (0, 1], got {p_edge}")
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    rng = np.random.default_rng(seed)
    resamples = 0
    while True:
        draws = rng.random(len(pairs))
        edges = [pairs[i] for i in range(len(pairs)) if draws[i] < p_edge]
        if edges_connected(n, edges):
            break
        resamples += 1
    if resamples:
        logger.debug(
            "erdos_renyi(n=%d, p=%g, seed=%d): %d disconnected samples rejected",
            n, p_edge, seed, resamples,
        )
    return Graph(n, edges)


def generate_complete(n: int) -> Graph:
    if n < 2:
        raise GraphError(f"need at least 2 vertices, got n={n}")
    return Graph(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def generate_cycle(n: int) -> Graph:
    if n < 3:
        raise GraphError(f"cycle needs at least 3 vertices, got n={n}")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def read_edge_list(text: str) -> Graph:
    """Parse the edge-list format: header line "n m", then m lines "u v".

    All validation errors carry the offending 1-based line number.
    """
    lines = text.splitlines()
    if not lines or not lines[0].strip():
        raise GraphError("line 1: missing 'n m' header")
    header = lines[0].split()
    if len(header) != 2:
        raise GraphError(f"line 1: expected 'n m' header, got {lines[0]!r}")
    try:
        n, m = int(header[0]), int(header[1])
    except ValueError:
        raise GraphError(f"line 1: non-integer header {lines[0]!r}") from None
    edges: list[Edge] = []
    seen: set[Edge] = set()
    for i, raw in enumerate(lines[1:], start=2):
        if not raw.strip():
            continue
        parts = raw.split()
        if len(parts) != 2:
            raise GraphError(f"line {i}: expected 'u v', got {raw!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise GraphError(f"line {i}: non-integer vertex in {raw!r}") from None
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"line {i}: vertex out of range in ({u}, {v})")
        if u == v:
            raise GraphError(f"line {i}: self-loop at vertex {u}")
        e = canonical_edge(u, v)
        if e in seen:
            raise GraphError(f"line {i}: duplicate edge ({e[0]}, {e[1]})")
        seen.add(e)
        edges.append(e)
    if len(edges) != m:
        raise GraphError(f"header declares m={m} edges but found {len(edges)}")
    return Graph(n, edges)


def write_edge_list(g: Graph) -> str:
    """Serialize in canonical order; read_edge_list round-trips exactly."""
    out = [f"{g.n} {g.m}"]
    out.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(out) + "\n"
