"""Constructors for the named graph families used throughout the toolkit."""

from __future__ import annotations

from importlib import resources
from itertools import combinations

from .graph import DiGraph, Graph, GraphError, Orientation, from_edge_list
from .graph6 import from_graph6


def path(k: int) -> Graph:
    """Path with ``k`` edges (``k + 1`` vertices); ``path(0)`` is K1."""
    if k < 0:
        raise GraphError("path length must be >= 0")
    return from_edge_list(k + 1, [(i, i + 1) for i in range(k)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise GraphError(f"cycle needs n >= 3, got {n}")
    return from_edge_list(n, [(i, (i + 1) % n) for i in range(n)])


def star(n: int) -> Graph:
    """Centre 0 joined to ``n`` leaves."""
    if n < 1:
        raise GraphError("star needs at least one leaf")
    return from_edge_list(n + 1, [(0, i) for i in range(1, n + 1)])


def extended_star(i: int) -> Graph:
    """Three-armed star with ``i`` arms of length 2 and ``3 - i`` of length 1.

    ``i = 1, 2, 3`` give the Dynkin-diagram trees D5, E6 and affine E6.
    """
    if i not in (1, 2, 3):
        raise GraphError("extended star index must be 1, 2 or 3")
    pairs, nxt = [], 1
    for arm in range(3):
        pairs.append((0, nxt))
        if arm < i:
            pairs.append((nxt, nxt + 1))
            nxt += 2
        else:
            nxt += 1
    return from_edge_list(nxt, pairs)


def complete(n: int) -> Graph:
    if n < 1:
        raise GraphError("complete graph needs n >= 1")
    return from_edge_list(n, combinations(range(n), 2))


def complete_bipartite(a: int, b: int) -> Graph:
    """K_{a,b}; the ``b``-side takes labels ``0..b-1``, the ``a``-side the rest.

    This ordering reproduces the usual printed Laplacian of K_{5,4}, whose
    first four rows carry degree 5.
    """
    if a < 1 or b < 1:
        raise GraphError("both sides of a complete bipartite graph must be non-empty")
    return from_edge_list(a + b, [(i, b + j) for i in range(b) for j in range(a)])


def diamond() -> Graph:
    return from_edge_list(4, [(0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])


def diamond_orientation() -> tuple[Orientation, list[tuple[int, int]]]:
    """Reference orientation of the diamond and its incidence-row order."""
    rows = [(0, 2), (0, 3), (3, 2), (3, 1), (2, 1)]
    return Orientation.from_arrows(diamond(), rows), rows


def octahedral() -> Graph:
    return from_edge_list(6, [(i, j) for i, j in combinations(range(6), 2) if i + j != 5])


def cube() -> Graph:
    return from_edge_list(8, [(v, v ^ (1 << b)) for v in range(8) for b in range(3)])


def dipyramid(n: int = 5) -> Graph:
    """Two non-adjacent apexes (0, 1) over an equator cycle on ``n - 2`` vertices."""
    if n < 5:
        raise GraphError("dipyramid needs n >= 5")
    ring = list(range(2, n))
    pairs = [(ring[k], ring[(k + 1) % len(ring)]) for k in range(len(ring))]
    pairs += [(apex, v) for apex in (0, 1) for v in ring]
    return from_edge_list(n, pairs)


def dipyramid_orientation() -> DiGraph:
    """The worked-example orientation of dipyramid(5), relabelled to 0-based."""
    one_based = [(1, 4), (1, 5), (2, 4), (3, 1), (3, 2), (3, 5), (4, 3), (5, 2), (5, 4)]
    return DiGraph.from_arrows(5, [(a - 1, b - 1) for a, b in one_based])


def generalized_petersen(n: int, k: int) -> Graph:
    pairs = []
    for i in range(n):
        pairs += [(i, (i + 1) % n), (i, n + i), (n + i, n + (i + k) % n)]
    return from_edge_list(2 * n, pairs)


def petersen() -> Graph:
    return generalized_petersen(5, 2)


def dodecahedral() -> Graph:
    return generalized_petersen(10, 2)


def _bundled(name: str) -> Graph:
    text = resources.files("graphgeom.data").joinpath(name).read_text()
    lines = [ln for ln in text.splitlines() if ln.strip() and not ln.startswith("#")]
    return from_graph6(lines[0])


def triplex() -> Graph:
    return _bundled("triplex.g6")


def half_dodecahedral() -> Graph:
    return _bundled("half_dodecahedral.g6")


_FAMILIES = {
    "path": path,
    "cycle": cycle,
    "star": star,
    "extended_star": extended_star,
    "complete": complete,
    "complete_bipartite": complete_bipartite,
    "diamond": diamond,
    "octahedral": octahedral,
    "cube": cube,
    "dipyramid": dipyramid,
    "petersen": petersen,
    "dodecahedral": dodecahedral,
    "triplex": triplex,
    "half_dodecahedral": half_dodecahedral,
}


def named(family: str, *params: int) -> Graph:
    """Look up a family by name, e.g. ``named("cycle", 6)``."""
    try:
        ctor = _FAMILIES[family]
    except KeyError:
        raise GraphError(f"unknown graph family {family!r}; known: {sorted(_FAMILIES)}") from None
    try:
        return ctor(*params)
    except TypeError as exc:
        raise GraphError(f"bad parameters {params} for family {family!r}: {exc}") from None


def family_names() -> list[str]:
    return sorted(_FAMILIES)
