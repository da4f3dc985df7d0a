"""Combinatorial graph invariants used as learning labels."""

from __future__ import annotations

import math
from collections import deque
from dataclasses import asdict, dataclass

import networkx as nx

from .graph import Graph, GraphError, component_labels, connected_components
from .spectra import diameter

DEFAULT_CHROMATIC_CAP = 15
DEFAULT_HAMILTONIAN_CAP = 15


def _to_nx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges)
    return h


def is_planar(g: Graph) -> bool:
    """Left-right planarity test (networkx implementation)."""
    if g.m <= 8 or (g.n >= 3 and g.m > 3 * g.n - 6):
        # fewer than 9 edges cannot contain a Kuratowski subdivision
        return g.m <= 8
    return nx.check_planarity(_to_nx(g), counterexample=False)[0]


def skewness_class(g: Graph) -> int:
    """0 if planar, 1 if one edge deletion suffices, else 2 (meaning > 1)."""
    if is_planar(g):
        return 0
    for e in g.edges:
        h = Graph(g.n, tuple(x for x in g.edges if x != e))
        if is_planar(h):
            return 1
    return 2


def girth(g: Graph) -> float:
    """Shortest cycle length by BFS from every vertex; ``inf`` for forests."""
    best = math.inf
    for s in range(g.n):
        dist = [-1] * g.n
        parent = [-1] * g.n
        dist[s] = 0
        q = deque([s])
        while q:
            u = q.popleft()
            if 2 * dist[u] + 1 >= best:
                break
            for v in g.neighbors[u]:
                if dist[v] < 0:
                    dist[v] = dist[u] + 1
                    parent[v] = u
                    q.append(v)
                elif parent[u] != v:
                    best = min(best, dist[u] + dist[v] + 1)
    return best


def is_bipartite(g: Graph) -> bool:
    side = [-1] * g.n
    for s in range(g.n):
        if side[s] >= 0:
            continue
        side[s] = 0
        q = deque([s])
        while q:
            u = q.popleft()
            for v in g.neighbors[u]:
                if side[v] < 0:
                    side[v] = 1 - side[u]
                    q.append(v)
                elif side[v] == side[u]:
                    return False
    return True


def is_acyclic(g: Graph) -> bool:
    return g.m == g.n - connected_components(g)


def chromatic_number(g: Graph, cap: int = DEFAULT_CHROMATIC_CAP) -> int:
    """Exact chromatic number by DSATUR-ordered branch and bound."""
    if g.n > cap:
        raise GraphError(f"n = {g.n} exceeds the chromatic cap {cap}; "
                         "use is_bipartite for the <= 2 question or raise the cap")
    if g.n == 0:
        return 0
    if g.m == 0:
        return 1
    if is_bipartite(g):
        return 2
    nbrs = g.neighbors
    color = [-1] * g.n
    best = [g.n]

    def pick() -> int:
        chosen, key = -1, None
        for v in range(g.n):
            if color[v] < 0:
                sat = len({color[u] for u in nbrs[v] if color[u] >= 0})
                k = (sat, len(nbrs[v]), -v)
                if key is None or k > key:
                    chosen, key = v, k
        return chosen

    def solve(colored: int, used: int) -> None:
        if used >= best[0]:
            return
        if colored == g.n:
            best[0] = used
            return
        v = pick()
        taken = {color[u] for u in nbrs[v]}
        for c in range(min(used + 1, best[0] - 1)):
            if c not in taken:
                color[v] = c
                solve(colored + 1, max(used, c + 1))
                color[v] = -1

    solve(0, 0)
    return best[0]


def has_eulerian_cycle(g: Graph) -> bool:
    """Connected on the non-isolated vertices and every degree even."""
    if g.m == 0:
        return False
    labels = component_labels(g)
    if len({labels[v] for v in range(g.n) if g.degrees[v] > 0}) != 1:
        return False
    return all(d % 2 == 0 for d in g.degrees)


def hamiltonian(g: Graph, count: bool = False, cap: int = DEFAULT_HAMILTONIAN_CAP):
    """Hamiltonian cycle existence and, optionally, the number of cycles.

    Cycles are counted as undirected vertex cycles: rotations and the two
    traversal directions of one cycle count once. Returns ``(exists, count)``
    with ``count`` ``None`` when not requested.
    """
    if g.n > cap:
        raise GraphError(f"n = {g.n} exceeds the Hamiltonian search cap {cap}")
    if g.n < 3 or min(g.degrees) < 2 or connected_components(g) != 1:
        return False, (0 if count else None)
    nbrs = [set(a) for a in g.neighbors]
    found = 0
    path = [0]
    visited = [False] * g.n
    visited[0] = True

    def extend() -> bool:
        nonlocal found
        u = path[-1]
        if len(path) == g.n:
            # fix vertex 0 as start; keep one direction via path[1] < path[-1]
            if 0 in nbrs[u] and path[1] < path[-1]:
                found += 1
                return not count
            return False
        for v in sorted(nbrs[u]):
            if not visited[v]:
                visited[v] = True
                path.append(v)
                if extend():
                    return True
                path.pop()
                visited[v] = False
        return False

    extend()
    return found > 0, (found if count else None)


@dataclass(frozen=True)
class InvariantRecord:
    planar: bool
    skewness_class: int
    girth: float
    diameter: float
    chromatic: int
    bipartite: bool
    acyclic: bool
    eulerian: bool
    hamiltonian: bool
    hamiltonian_count: int | None = None

    def as_dict(self) -> dict:
        return asdict(self)


def invariant_record(g: Graph, count_hamiltonian: bool = False,
                     chromatic_cap: int = DEFAULT_CHROMATIC_CAP,
                     hamiltonian_cap: int = DEFAULT_HAMILTONIAN_CAP) -> InvariantRecord:
    ham, cnt = hamiltonian(g, count=count_hamiltonian, cap=hamiltonian_cap)
    return InvariantRecord(
        planar=is_planar(g),
        skewness_class=skewness_class(g),
        girth=girth(g),
        diameter=diameter(g),
        chromatic=chromatic_number(g, cap=chromatic_cap),
        bipartite=is_bipartite(g),
        acyclic=is_acyclic(g),
        eulerian=has_eulerian_cycle(g),
        hamiltonian=ham,
        hamiltonian_count=cnt,
    )
