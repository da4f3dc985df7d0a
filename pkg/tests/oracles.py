"""Independent reference implementations used to cross-check the library.

Each oracle is deliberately naive (brute force, dense, or delegated to a
third-party package) so that it shares no code path with the module it
checks.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import permutations, product

import networkx as nx
import numpy as np
from scipy.optimize import linprog


def to_nx(g) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges)
    return h


def hamiltonian_cycle_count(g) -> int:
    """Undirected Hamiltonian cycles by enumerating vertex orders from 0."""
    if g.n < 3:
        return 0
    count = 0
    for rest in permutations(range(1, g.n)):
        if rest[0] > rest[-1]:
            continue  # each cycle appears once per direction
        order = (0,) + rest
        if all(g.has_edge(order[i], order[(i + 1) % g.n]) for i in range(g.n)):
            count += 1
    return count


def chromatic_number(g) -> int:
    for k in range(1, g.n + 1):
        for colours in product(range(k), repeat=g.n):
            if colours[0] == 0 and all(colours[i] != colours[j] for i, j in g.edges):
                return k
    return max(g.n, 0)


def girth(g) -> float:
    best = float("inf")
    for i, j in g.edges:
        h = to_nx(g)
        h.remove_edge(i, j)
        try:
            best = min(best, nx.shortest_path_length(h, i, j) + 1)
        except nx.NetworkXNoPath:
            pass
    return best


def fraction_rank(rows) -> int:
    """Plain Gaussian elimination over Fraction (no pivot heuristics)."""
    m = [[Fraction(x) for x in r] for r in rows]
    rank, col = 0, 0
    ncols = len(m[0]) if m else 0
    while rank < len(m) and col < ncols:
        piv = next((r for r in range(rank, len(m)) if m[r][col] != 0), None)
        if piv is None:
            col += 1
            continue
        m[rank], m[piv] = m[piv], m[rank]
        for r in range(len(m)):
            if r != rank and m[r][col] != 0:
                f = m[r][col] / m[rank][col]
                m[r] = [a - f * b for a, b in zip(m[r], m[rank])]
        rank += 1
        col += 1
    return rank


def transport_value_float(supply, demand, cost) -> float:
    ms, md = len(supply), len(demand)
    a_eq, b_eq = [], []
    for i in range(ms):
        a_eq.append([1.0 if k // md == i else 0.0 for k in range(ms * md)])
        b_eq.append(float(supply[i]))
    for j in range(md):
        a_eq.append([1.0 if k % md == j else 0.0 for k in range(ms * md)])
        b_eq.append(float(demand[j]))
    c = [float(cost[k // md][k % md]) for k in range(ms * md)]
    res = linprog(c, A_eq=a_eq, b_eq=b_eq, bounds=(0, None), method="highs")
    assert res.status == 0
    return float(res.fun)


def gamma2_matrix_dense(g) -> list[np.ndarray]:
    """Γ₂ at every vertex from the definition, with dense numpy operators.

    Uses Δf(x) = mean over neighbours of f(y) - f(x). The bilinear forms
    are assembled by polarisation on the standard basis of R^V.
    """
    n = g.n
    a = np.zeros((n, n))
    for i, j in g.edges:
        a[i, j] = a[j, i] = 1
    deg = a.sum(axis=1)
    lap = a / deg[:, None] - np.eye(n)

    def gamma(f, h):
        return 0.5 * (lap @ (f * h) - f * (lap @ h) - h * (lap @ f))

    def gamma2(f, h):
        return 0.5 * (lap @ gamma(f, h) - gamma(f, lap @ h) - gamma(h, lap @ f))

    e = np.eye(n)
    out = []
    for x in range(n):
        m = np.array([[gamma2(e[u], e[v])[x] for v in range(n)] for u in range(n)])
        out.append(m)
    return out


def gamma_matrix_dense(g) -> list[np.ndarray]:
    n = g.n
    a = np.zeros((n, n))
    for i, j in g.edges:
        a[i, j] = a[j, i] = 1
    deg = a.sum(axis=1)
    lap = a / deg[:, None] - np.eye(n)
    e = np.eye(n)

    def gamma(f, h):
        return 0.5 * (lap @ (f * h) - f * (lap @ h) - h * (lap @ f))

    return [np.array([[gamma(e[u], e[v])[x] for v in range(n)] for u in range(n)]) for x in range(n)]


def kruskal_h0_deaths(points) -> list[float]:
    pts = np.asarray(points, dtype=float)
    n = len(pts)
    edges = sorted((float(np.linalg.norm(pts[i] - pts[j])), i, j) for i in range(n) for j in range(i + 1, n))
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            x = parent[x]
        return x

    deaths = []
    for w, i, j in edges:
        ri, rj = find(i), find(j)
        if ri != rj:
            parent[ri] = rj
            deaths.append(w)
    return sorted(deaths)


# connected planar graphs on n = 1..7 vertices (OEIS A003094)
CONNECTED_PLANAR_COUNTS = (1, 1, 2, 6, 20, 99, 646)


def _rips_simplices(points, threshold):
    pts = np.asarray(points, dtype=float)
    n = len(pts)
    d = np.linalg.norm(pts[:, None] - pts[None, :], axis=-1)
    simplices = [(0.0, 0, (v,)) for v in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            if d[i, j] <= threshold:
                simplices.append((d[i, j], 1, (i, j)))
            for k in range(j + 1, n):
                w = max(d[i, j], d[i, k], d[j, k])
                if w <= threshold:
                    simplices.append((w, 2, (i, j, k)))
    simplices.sort()
    return simplices


def reduction_barcode(points, threshold=np.inf):
    """Dense GF(2) reduction of the full boundary matrix (vertices, edges, triangles).

    Returns ``{0: [...], 1: [...]}`` with zero-length bars dropped.
    """
    simplices = _rips_simplices(points, threshold)
    index = {s: r for r, (_, _, s) in enumerate(simplices)}
    m = len(simplices)
    mat = np.zeros((m, m), dtype=np.uint8)
    for c, (_, dim, s) in enumerate(simplices):
        if dim:
            for f in range(len(s)):
                mat[index[s[:f] + s[f + 1:]], c] = 1
    owner = {}
    for c in range(m):
        while mat[:, c].any():
            lo = int(np.flatnonzero(mat[:, c])[-1])
            if lo not in owner:
                owner[lo] = c
                break
            mat[:, c] ^= mat[:, owner[lo]]
    bars = {0: [], 1: []}
    for r, (w, dim, _) in enumerate(simplices):
        if dim > 1 or mat[:, r].any():
            continue  # only simplices whose column reduced to zero create a class
        death = simplices[owner[r]][0] if r in owner else np.inf
        if death > w:
            bars[dim].append((w, death))
    return {k: sorted(v) for k, v in bars.items()}
