"""Graph and digraph value types plus the basic matrix views.

Vertices are labelled ``0..n-1``. All objects are immutable; every
randomized helper takes an explicit integer seed.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Mapping, Sequence

import numpy as np


class GraphError(ValueError):
    """Raised for structurally invalid graph input."""


def _norm_edge(i: int, j: int) -> tuple[int, int]:
    return (i, j) if i < j else (j, i)


@dataclass(frozen=True)
class Graph:
    """Finite simple undirected graph, optionally edge-weighted.

    ``edges`` holds sorted pairs ``(i, j)`` with ``i < j``. ``weights`` is
    either ``None`` (all weights 1) or a tuple of positive rationals aligned
    with ``edges``.
    """

    n: int
    edges: tuple[tuple[int, int], ...]
    weights: tuple[Fraction, ...] | None = field(default=None, compare=True)

    def __post_init__(self):
        if self.n < 0:
            raise GraphError(f"vertex count must be non-negative, got {self.n}")
        seen = set()
        for i, j in self.edges:
            if i == j:
                raise GraphError(f"self-loop at vertex {i}")
            if not (0 <= i < self.n and 0 <= j < self.n):
                raise GraphError(f"edge ({i}, {j}) has a label outside 0..{self.n - 1}")
            if i > j:
                raise GraphError("edges must be stored as (i, j) with i < j")
            if (i, j) in seen:
                raise GraphError(f"duplicate edge ({i}, {j})")
            seen.add((i, j))
        if list(self.edges) != sorted(self.edges):
            raise GraphError("edges must be sorted")
        if self.weights is not None:
            if len(self.weights) != len(self.edges):
                raise GraphError("weights must cover exactly the edge set")
            if any(w <= 0 for w in self.weights):
                raise GraphError("edge weights must be strictly positive")

    @cached_property
    def neighbors(self) -> tuple[tuple[int, ...], ...]:
        adj: list[list[int]] = [[] for _ in range(self.n)]
        for i, j in self.edges:
            adj[i].append(j)
            adj[j].append(i)
        return tuple(tuple(sorted(a)) for a in adj)

    @cached_property
    def edge_set(self) -> frozenset[tuple[int, int]]:
        return frozenset(self.edges)

    @property
    def m(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return len(self.neighbors[v])

    @cached_property
    def degrees(self) -> tuple[int, ...]:
        return tuple(len(a) for a in self.neighbors)

    def has_edge(self, i: int, j: int) -> bool:
        return _norm_edge(i, j) in self.edge_set

    def weight(self, i: int, j: int) -> Fraction:
        e = _norm_edge(i, j)
        if self.weights is None:
            if e not in self.edge_set:
                raise KeyError(e)
            return Fraction(1)
        return self.weights[self.edges.index(e)]

    def distances_from(self, source: int) -> list[int | None]:
        """BFS hop distances; ``None`` for unreachable vertices."""
        dist: list[int | None] = [None] * self.n
        dist[source] = 0
        queue = deque([source])
        while queue:
            u = queue.popleft()
            for v in self.neighbors[u]:
                if dist[v] is None:
                    dist[v] = dist[u] + 1
                    queue.append(v)
        return dist

    @cached_property
    def distance_matrix(self) -> tuple[tuple[int | None, ...], ...]:
        return tuple(tuple(self.distances_from(s)) for s in range(self.n))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={list(self.edges)})"


@dataclass(frozen=True)
class DiGraph:
    """Finite directed graph without loops; at most one arrow per ordered pair."""

    n: int
    arrows: tuple[tuple[int, int], ...]

    def __post_init__(self):
        seen = set()
        for i, j in self.arrows:
            if i == j:
                raise GraphError(f"self-loop at vertex {i}")
            if not (0 <= i < self.n and 0 <= j < self.n):
                raise GraphError(f"arrow ({i}, {j}) has a label outside 0..{self.n - 1}")
            if (i, j) in seen:
                raise GraphError(f"duplicate arrow ({i}, {j})")
            seen.add((i, j))
        if list(self.arrows) != sorted(self.arrows):
            raise GraphError("arrows must be sorted")

    @classmethod
    def from_arrows(cls, n: int, arrows: Iterable[Sequence[int]]) -> "DiGraph":
        return cls(n, tuple(sorted({(int(a), int(b)) for a, b in arrows})))

    @cached_property
    def successors(self) -> tuple[tuple[int, ...], ...]:
        out: list[list[int]] = [[] for _ in range(self.n)]
        for i, j in self.arrows:
            out[i].append(j)
        return tuple(tuple(sorted(o)) for o in out)

    @cached_property
    def arrow_set(self) -> frozenset[tuple[int, int]]:
        return frozenset(self.arrows)

    def underlying(self) -> Graph:
        return from_edge_list(self.n, self.arrows)


@dataclass(frozen=True)
class Orientation:
    """A choice of direction for every edge of ``graph``.

    ``heads`` is aligned with ``graph.edges``: edge ``(i, j)`` is directed
    ``i -> j`` when ``heads[k] == j`` and ``j -> i`` otherwise.
    """

    graph: Graph
    heads: tuple[int, ...]

    def __post_init__(self):
        if len(self.heads) != self.graph.m:
            raise GraphError("orientation must cover exactly the edge set")
        for (i, j), h in zip(self.graph.edges, self.heads):
            if h not in (i, j):
                raise GraphError(f"head {h} is not an endpoint of edge ({i}, {j})")

    @classmethod
    def from_arrows(cls, graph: Graph, arrows: Iterable[Sequence[int]]) -> "Orientation":
        direction = {}
        for a, b in arrows:
            direction[_norm_edge(a, b)] = b
        if set(direction) != graph.edge_set:
            raise GraphError("arrows must orient exactly the edges of the graph")
        return cls(graph, tuple(direction[e] for e in graph.edges))

    @property
    def arrows(self) -> list[tuple[int, int]]:
        return [((j if h == i else i), h) for (i, j), h in zip(self.graph.edges, self.heads)]

    def digraph(self) -> DiGraph:
        return DiGraph.from_arrows(self.graph.n, self.arrows)


@dataclass(frozen=True, eq=False)
class PaddedMatrix:
    """Zero-padded ``dim x dim`` adjacency matrix (graph in the top-left block)."""

    dim: int
    entries: np.ndarray

    def flatten(self) -> np.ndarray:
        return self.entries.reshape(-1)


# --------------------------------------------------------------------------
# construction


def from_edge_list(n: int, pairs: Iterable[Sequence[int]], weights: Mapping | None = None) -> Graph:
    """Build a :class:`Graph` from arbitrary (possibly repeated) vertex pairs.

    Pairs are undirected, so ``(0, 1)`` and ``(1, 0)`` collapse to one edge.
    ``weights`` maps a pair (either order) to a positive number.
    """
    n = int(n)
    edges = set()
    for pair in pairs:
        i, j = (int(x) for x in pair)
        if i == j:
            raise GraphError(f"self-loop ({i}, {j}) is not allowed in a simple graph")
        if not (0 <= i < n and 0 <= j < n):
            raise GraphError(f"pair ({i}, {j}) has a label outside 0..{n - 1}")
        edges.add(_norm_edge(i, j))
    edges_t = tuple(sorted(edges))
    w = None
    if weights is not None:
        wmap = {_norm_edge(*k): Fraction(v) for k, v in weights.items()}
        if set(wmap) != set(edges_t):
            raise GraphError("weights must cover exactly the edge set")
        w = tuple(wmap[e] for e in edges_t)
    return Graph(n, edges_t, w)


def disjoint_union(*graphs: Graph) -> Graph:
    pairs, offset = [], 0
    for g in graphs:
        pairs += [(i + offset, j + offset) for i, j in g.edges]
        offset += g.n
    return from_edge_list(offset, pairs)


# --------------------------------------------------------------------------
# matrices


def adjacency_matrix(g: Graph, weighted: bool = False) -> np.ndarray:
    a = np.zeros((g.n, g.n), dtype=float if weighted else np.int64)
    for k, (i, j) in enumerate(g.edges):
        w = float(g.weights[k]) if (weighted and g.weights is not None) else 1
        a[i, j] = a[j, i] = w
    return a


def degree_matrix(g: Graph) -> np.ndarray:
    return np.diag(np.array(g.degrees, dtype=np.int64)).reshape(g.n, g.n)


def incidence_matrix(o: Orientation, rows: Sequence[tuple[int, int]] | None = None) -> np.ndarray:
    """``|E| x |V|`` matrix with -1 at the tail and +1 at the head of each arrow.

    Rows follow ``graph.edges`` unless ``rows`` lists the arrows in the
    desired order.
    """
    arrows = list(o.arrows)
    if rows is not None:
        rows = [tuple(int(v) for v in a) for a in rows]
        if sorted(rows) != sorted(arrows):
            raise GraphError("row order must list exactly the arrows of the orientation")
        arrows = rows
    nabla = np.zeros((o.graph.m, o.graph.n), dtype=np.int64)
    for row, (tail, head) in enumerate(arrows):
        nabla[row, tail] = -1
        nabla[row, head] = 1
    return nabla


# --------------------------------------------------------------------------
# relabelling, augmentation, padding


def _check_perm(perm: Sequence[int], n: int) -> list[int]:
    perm = [int(p) for p in perm]
    if sorted(perm) != list(range(n)):
        raise GraphError(f"{perm} is not a permutation of 0..{n - 1}")
    return perm


def permute(g: Graph, perm: Sequence[int]) -> Graph:
    """Relabel vertex ``v`` as ``perm[v]``."""
    perm = _check_perm(perm, g.n)
    weights = None
    if g.weights is not None:
        weights = {(perm[i], perm[j]): w for (i, j), w in zip(g.edges, g.weights)}
    return from_edge_list(g.n, [(perm[i], perm[j]) for i, j in g.edges], weights)


def augment(g: Graph, k: int, seed: int) -> list[Graph]:
    """``k`` uniformly random relabellings of ``g``, duplicates removed.

    Order is first-occurrence order of the seeded draw, so output is
    reproducible for a fixed seed.
    """
    if k < 0:
        raise GraphError("augmentation count must be non-negative")
    rng = np.random.default_rng(seed)
    out, seen = [], set()
    for _ in range(k):
        h = permute(g, rng.permutation(g.n))
        if h.edges not in seen:
            seen.add(h.edges)
            out.append(h)
    return out


def pad(g: Graph, dim: int) -> PaddedMatrix:
    if dim < g.n:
        raise GraphError(f"pad dimension {dim} is smaller than the vertex count {g.n}")
    m = np.zeros((dim, dim), dtype=np.int8)
    for i, j in g.edges:
        m[i, j] = m[j, i] = 1
    return PaddedMatrix(dim, m)


# --------------------------------------------------------------------------
# random objects


def random_graph(n: int, p: float | Fraction, seed: int) -> Graph:
    """Erdős-Rényi G(n, p)."""
    p = float(p)
    if not 0.0 <= p <= 1.0:
        raise GraphError(f"edge probability must lie in [0, 1], got {p}")
    rng = np.random.default_rng(seed)
    iu, ju = np.triu_indices(n, k=1)
    keep = rng.random(iu.size) < p
    return from_edge_list(n, zip(iu[keep].tolist(), ju[keep].tolist()))


def random_orientation(g: Graph, seed: int) -> Orientation:
    rng = np.random.default_rng(seed)
    flips = rng.random(g.m) < 0.5
    heads = tuple(j if not f else i for (i, j), f in zip(g.edges, flips))
    return Orientation(g, heads)


def orient_random(g: Graph, seed: int) -> DiGraph:
    """Direct each edge independently and uniformly at random."""
    return random_orientation(g, seed).digraph()


# --------------------------------------------------------------------------
# connectivity


def component_labels(g: Graph) -> list[int]:
    label = [-1] * g.n
    current = 0
    for s in range(g.n):
        if label[s] >= 0:
            continue
        label[s] = current
        stack = [s]
        while stack:
            u = stack.pop()
            for v in g.neighbors[u]:
                if label[v] < 0:
                    label[v] = current
                    stack.append(v)
        current += 1
    return label


def connected_components(g: Graph) -> int:
    return len(set(component_labels(g)))


def is_connected(g: Graph) -> bool:
    return g.n > 0 and connected_components(g) == 1
