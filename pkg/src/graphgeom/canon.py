"""Canonical labelling and exhaustive enumeration of connected graphs.

The canonical form of a graph is the minimum of its upper-triangle
adjacency bit-string over all labellings reachable in an
individualisation-refinement search tree. Colour refinement (degree
sequences, then iterated neighbour-colour multisets) prunes the tree: only
labellings consistent with the refined vertex classes are tried, so
highly asymmetric graphs settle on a single leaf.
"""

from __future__ import annotations

from .graph import Graph, GraphError, from_edge_list, permute

DEFAULT_ENUMERATION_CAP = 7


def _refine(adj: list[int], colors: list[int]) -> list[int]:
    n = len(adj)
    while True:
        sigs = []
        for v in range(n):
            nb = adj[v]
            sigs.append((colors[v], tuple(sorted(colors[u] for u in range(n) if nb >> u & 1))))
        order = {s: k for k, s in enumerate(sorted(set(sigs)))}
        new = [order[s] for s in sigs]
        if len(order) == len(set(colors)):
            return new
        colors = new


def _individualize(colors: list[int], v: int) -> list[int]:
    # v sorts strictly before the rest of its class; other classes keep their order
    keyed = [(c, 0 if u == v else 1) if c == colors[v] else (c, 0) for u, c in enumerate(colors)]
    order = {s: k for k, s in enumerate(sorted(set(keyed)))}
    return [order[s] for s in keyed]


def _leaf_code(adj: list[int], colors: list[int]) -> tuple[int, list[int]]:
    n = len(adj)
    inv = sorted(range(n), key=lambda v: colors[v])  # inv[position] = vertex
    code = 0
    for j in range(1, n):
        aj = adj[inv[j]]
        for i in range(j):
            code = (code << 1) | (aj >> inv[i] & 1)
    return code, inv


class _SearchState:
    def __init__(self):
        self.best_code = None
        self.best_inv = None
        self.first_code = None
        self.first_inv = None
        self.automorphisms: list[list[int]] = []

    def leaf(self, code: int, inv: list[int]) -> None:
        if self.first_code is None:
            self.first_code, self.first_inv = code, inv
        for ref_code, ref_inv in ((self.first_code, self.first_inv), (self.best_code, self.best_inv)):
            if code == ref_code and inv != ref_inv:
                # equal codes: vertex inv[i] -> ref_inv[i] preserves adjacency
                gamma = [0] * len(inv)
                for u, w in zip(inv, ref_inv):
                    gamma[u] = w
                self.automorphisms.append(gamma)
                break
        # bit-strings compare MSB-first: the first pair carries the top bit,
        # so a smaller integer is the lexicographically smaller string
        if self.best_code is None or code < self.best_code:
            self.best_code, self.best_inv = code, inv


def _orbit_roots(n: int, generators: list[list[int]]) -> list[int]:
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for gamma in generators:
        for u, w in enumerate(gamma):
            ru, rw = find(u), find(w)
            if ru != rw:
                parent[max(ru, rw)] = min(ru, rw)
    return [find(x) for x in range(n)]


def _search(adj: list[int], colors: list[int], state: _SearchState, fixed: tuple[int, ...] = ()):
    n = len(adj)
    if len(set(colors)) == n:
        state.leaf(*_leaf_code(adj, colors))
        return
    counts: dict[int, int] = {}
    for c in colors:
        counts[c] = counts.get(c, 0) + 1
    target = min(c for c, k in counts.items() if k > 1)
    explored: list[int] = []
    for v in range(n):
        if colors[v] != target:
            continue
        if explored:
            # children in one orbit of the pointwise stabiliser of ``fixed`` are equivalent
            gens = [g for g in state.automorphisms if all(g[x] == x for x in fixed)]
            if gens:
                roots = _orbit_roots(n, gens)
                if any(roots[v] == roots[u] for u in explored):
                    continue
        explored.append(v)
        _search(adj, _refine(adj, _individualize(colors, v)), state, fixed + (v,))


def canonical_labeling(g: Graph) -> list[int]:
    """Permutation ``perm`` such that ``permute(g, perm)`` is the canonical form."""
    if g.n == 0:
        return []
    adj = [0] * g.n
    for i, j in g.edges:
        adj[i] |= 1 << j
        adj[j] |= 1 << i
    state = _SearchState()
    _search(adj, _refine(adj, [0] * g.n), state)
    perm = [0] * g.n
    for pos, v in enumerate(state.best_inv):
        perm[v] = pos
    return perm


def canonical_form(g: Graph) -> Graph:
    return permute(g, canonical_labeling(g))


def canonical_key(g: Graph) -> tuple[int, tuple[tuple[int, int], ...]]:
    """Hashable isomorphism-class key."""
    return g.n, canonical_form(g).edges


def are_isomorphic(g: Graph, h: Graph) -> bool:
    return g.n == h.n and g.m == h.m and sorted(g.degrees) == sorted(h.degrees) \
        and canonical_key(g) == canonical_key(h)


def _check_cap(n: int, cap: int) -> None:
    if n < 1:
        raise GraphError("enumeration needs n >= 1")
    if n > cap:
        raise GraphError(
            f"n = {n} exceeds the enumeration cap {cap}; raise the cap explicitly "
            f"(class counts grow super-exponentially) or sample random graphs instead")


def _levels(n: int):
    """Yield the sorted class list for 1, 2, ..., n vertices."""
    level = {canonical_key(from_edge_list(1, []))[1]: None}
    yield [from_edge_list(1, [])]
    for k in range(2, n + 1):
        nxt = {}
        for edges in level:
            for mask in range(1, 1 << (k - 1)):
                extra = [(v, k - 1) for v in range(k - 1) if mask >> v & 1]
                h = from_edge_list(k, list(edges) + extra)
                nxt.setdefault(canonical_form(h).edges, None)
        level = nxt
        yield sorted((Graph(k, e) for e in level), key=lambda g: (g.m, g.edges))


def enumerate_connected(n: int, cap: int = DEFAULT_ENUMERATION_CAP) -> list[Graph]:
    """One canonical representative per connected graph on ``n`` vertices.

    Every connected graph has a vertex whose removal leaves it connected,
    so each class on ``n`` vertices is reached by attaching a new vertex
    (with a non-empty neighbourhood) to a class on ``n - 1`` vertices.
    Output is sorted by edge count, then by canonical edge list.
    """
    _check_cap(n, cap)
    for graphs in _levels(n):
        pass
    return graphs


def enumerate_connected_upto(n: int, cap: int = DEFAULT_ENUMERATION_CAP) -> list[Graph]:
    """All classes on 1..n vertices, ordered by vertex count then as above."""
    _check_cap(n, cap)
    return [g for graphs in _levels(n) for g in graphs]
