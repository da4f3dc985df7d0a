"""Vietoris-Rips persistence in dimensions 0 and 1.

H0 bars come from a minimum spanning tree (single linkage). H1 bars come
from the standard column reduction over GF(2) of the Rips filtration
truncated at a distance threshold and at dimension 2. Columns are stored
as Python integers used as bitsets, so adding two columns is one XOR.
"""

from __future__ import annotations

import csv
import io
import math
from dataclasses import dataclass
from itertools import combinations

import numpy as np

DEFAULT_SIMPLEX_CAP = 2_000_000


class ComplexTooLarge(ValueError):
    pass


@dataclass(frozen=True)
class Barcode:
    dimension: int
    intervals: tuple[tuple[float, float], ...]

    def finite(self) -> tuple[tuple[float, float], ...]:
        return tuple(iv for iv in self.intervals if math.isfinite(iv[1]))


def subsample(points, k: int, seed: int) -> np.ndarray:
    """``k`` rows drawn uniformly without replacement."""
    pts = np.asarray(points, dtype=np.float64)
    if k > len(pts):
        raise ValueError(f"cannot draw {k} points from {len(pts)}")
    idx = np.random.default_rng(seed).choice(len(pts), size=k, replace=False)
    return pts[np.sort(idx)]


def distance_matrix(points) -> np.ndarray:
    pts = np.asarray(points, dtype=np.float64)
    if pts.ndim == 1:
        pts = pts[:, None]
    diff = pts[:, None, :] - pts[None, :, :]
    return np.sqrt(np.sum(diff * diff, axis=-1))


def mst_weights(dist: np.ndarray) -> np.ndarray:
    """Edge weights of a minimum spanning tree (Prim, dense)."""
    n = len(dist)
    if n == 0:
        return np.zeros(0)
    in_tree = np.zeros(n, dtype=bool)
    best = np.full(n, np.inf)
    best[0] = 0.0
    out = []
    for step in range(n):
        cand = np.where(in_tree, np.inf, best)
        v = int(np.argmin(cand))
        if step:
            out.append(cand[v])
        in_tree[v] = True
        best = np.minimum(best, dist[v])
    return np.sort(np.array(out))


def rips_h0(points) -> Barcode:
    """One ``(0, w)`` bar per MST edge plus the infinite bar."""
    pts = np.asarray(points, dtype=np.float64)
    if len(pts) < 1:
        raise ValueError("need at least one point")
    bars = [(0.0, float(w)) for w in mst_weights(distance_matrix(pts))]
    return Barcode(0, tuple(bars) + ((0.0, math.inf),))


def default_threshold(points) -> float:
    """1.1 times the longest MST edge."""
    w = mst_weights(distance_matrix(points))
    return 1.1 * float(w.max()) if len(w) else 0.0


def _filtration(dist: np.ndarray, threshold: float, cap: int):
    n = len(dist)
    adj = (dist <= threshold).astype(np.float64)
    np.fill_diagonal(adj, 0.0)
    # count before building: trace(A^3) / 6 triangles, A.sum() / 2 edges
    n_edges = int(adj.sum()) // 2
    n_tris = int(round(np.trace(adj @ adj @ adj) / 6))
    size = n + n_edges + n_tris
    if size > cap:
        raise ComplexTooLarge(f"Rips complex at threshold {threshold:g} has {size} simplices, "
                              f"over the cap of {cap}; lower the threshold")
    edges = [(float(dist[i, j]), i, j) for i, j in combinations(range(n), 2) if dist[i, j] <= threshold]
    nbrs = [set() for _ in range(n)]
    for _, i, j in edges:
        nbrs[i].add(j)
        nbrs[j].add(i)
    tris = []
    for _, i, j in edges:
        for k in nbrs[i] & nbrs[j]:
            if k > j:
                tris.append((max(dist[i, j], dist[i, k], dist[j, k]), i, j, k))
    return edges, tris


def _reduce(columns: list[int]) -> list[int]:
    """Standard GF(2) column reduction; returns the pivot (lowest set bit row) per column or -1."""
    low_owner: dict[int, int] = {}
    lows = []
    for j, col in enumerate(columns):
        while col:
            low = col.bit_length() - 1
            other = low_owner.get(low)
            if other is None:
                low_owner[low] = j
                break
            col ^= columns[other]
        columns[j] = col
        lows.append(col.bit_length() - 1 if col else -1)
    return lows


def rips_h1(points, threshold: float | None = None, cap: int = DEFAULT_SIMPLEX_CAP) -> Barcode:
    """H1 bars of the Rips filtration up to ``threshold``.

    Classes still alive at the threshold get death ``inf``. Bars of zero
    length are dropped.
    """
    pts = np.asarray(points, dtype=np.float64)
    if len(pts) < 3:
        raise ValueError("H1 needs at least three points")
    dist = distance_matrix(pts)
    if threshold is None:
        threshold = default_threshold(pts)
    edges, tris = _filtration(dist, threshold, cap)
    # filtration order: by value, then dimension, then vertex tuple (ties broken deterministically)
    edges.sort()
    tris.sort()
    edge_index = {(i, j): r for r, (_, i, j) in enumerate(edges)}
    # rows are edges ordered by filtration position; bit r = edge r
    tri_cols = [(1 << edge_index[(i, j)]) | (1 << edge_index[(i, k)]) | (1 << edge_index[(j, k)])
                for _, i, j, k in tris]
    lows = _reduce(tri_cols)
    killed = {low: t for t, low in enumerate(lows) if low >= 0}
    # an edge creates a cycle iff its boundary column reduces to zero (Kruskal test)
    parent = list(range(len(pts)))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    bars = []
    for r, (w, i, j) in enumerate(edges):
        ri, rj = find(i), find(j)
        if ri != rj:
            parent[ri] = rj
            continue  # negative edge: merges two components
        death = tris[killed[r]][0] if r in killed else math.inf
        if death > w:
            bars.append((w, float(death)))
    return Barcode(1, tuple(sorted(bars)))


def barcode_csv(barcodes) -> str:
    """Rows ``dimension,birth,death`` with ``inf`` for infinite deaths."""
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\r\n")
    w.writerow(["dimension", "birth", "death"])
    for bc in barcodes:
        for b, d in bc.intervals:
            w.writerow([bc.dimension, repr(float(b)), "inf" if math.isinf(d) else repr(float(d))])
    return buf.getvalue()
