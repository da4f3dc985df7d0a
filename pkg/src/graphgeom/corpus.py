"""Graph corpora for the sweeps and learning tasks.

``default_corpus``
    Every connected graph on at most 7 vertices, the named families, and
    seeded G(n, p) samples for 8 <= n <= 16.
``girth5_corpus``
    Connected graphs of girth at least 5: the enumerated ones, every tree
    on 8 to 12 vertices, the named girth-5 families (cycles, paths, stars,
    the exceptional cubic graphs), and seeded random girth-5 graphs grown
    from random trees. Trees dominate, as in a database of small graphs
    filtered by girth, so vertex and edge counts do not give the labels
    away on their own.
"""

from __future__ import annotations

from dataclasses import dataclass

import networkx as nx
import numpy as np

from . import families
from .canon import canonical_key, enumerate_connected_upto
from .graph import Graph, from_edge_list, random_graph
from .invariants import girth

DEFAULT_ENUM_MAX = 7
GIRTH5_TREE_SIZES = tuple(range(8, 13))
RANDOM_SIZES = tuple(range(8, 17))
RANDOM_P = (0.1, 0.15, 0.2, 0.3, 0.45, 0.6, 0.75)


@dataclass(frozen=True)
class CorpusEntry:
    graph: Graph
    source: str


def named_entries(max_n: int = 20) -> list[CorpusEntry]:
    """Named families up to ``max_n`` vertices."""
    out = [CorpusEntry(families.diamond(), "diamond"),
           CorpusEntry(families.octahedral(), "octahedral"),
           CorpusEntry(families.cube(), "cube"),
           CorpusEntry(families.dipyramid(5), "dipyramid(5)"),
           CorpusEntry(families.petersen(), "petersen"),
           CorpusEntry(families.triplex(), "triplex"),
           CorpusEntry(families.half_dodecahedral(), "half_dodecahedral"),
           CorpusEntry(families.dodecahedral(), "dodecahedral")]
    out += [CorpusEntry(families.complete(n), f"complete({n})") for n in range(1, 9)]
    out += [CorpusEntry(families.complete_bipartite(a, b), f"complete_bipartite({a},{b})")
            for a in range(1, 6) for b in range(1, a + 1) if a + b <= max_n]
    out += [CorpusEntry(families.cycle(n), f"cycle({n})") for n in range(3, max_n + 1)]
    out += [CorpusEntry(families.path(k), f"path({k})") for k in range(1, max_n)]
    out += [CorpusEntry(families.star(k), f"star({k})") for k in range(3, max_n)]
    out += [CorpusEntry(families.extended_star(i), f"extended_star({i})") for i in (1, 2, 3)]
    return [e for e in out if e.graph.n <= max_n]


def dedupe(entries: list[CorpusEntry]) -> list[CorpusEntry]:
    """Keep the first entry of each isomorphism class."""
    seen, out = set(), []
    for e in entries:
        key = canonical_key(e.graph)
        if key not in seen:
            seen.add(key)
            out.append(e)
    return out


def random_entries(seed: int, sizes=RANDOM_SIZES, probs=RANDOM_P, per_cell: int = 6) -> list[CorpusEntry]:
    """``per_cell`` G(n, p) samples for each (n, p) pair, seeded per cell."""
    out = []
    for n in sizes:
        for p in probs:
            for r in range(per_cell):
                s = int(np.random.SeedSequence([seed, n, int(p * 1000), r]).generate_state(1)[0])
                out.append(CorpusEntry(random_graph(n, p, s), f"gnp({n},{p},{r})"))
    return out


def default_corpus(seed: int = 0, enum_max: int = DEFAULT_ENUM_MAX, per_cell: int = 6) -> list[CorpusEntry]:
    entries = [CorpusEntry(g, "enumerated") for g in enumerate_connected_upto(enum_max)]
    entries += named_entries(max_n=16)
    entries += random_entries(seed, per_cell=per_cell)
    return dedupe(entries)


def random_girth5_graph(n: int, extra: int, rng: np.random.Generator) -> Graph:
    """Random tree on ``n`` vertices plus up to ``extra`` chords keeping girth >= 5.

    A chord ``uv`` keeps girth >= 5 exactly when ``d(u, v) >= 4`` before it
    is added.
    """
    edges = [(int(rng.integers(0, v)), v) for v in range(1, n)]
    g = from_edge_list(n, edges)
    for _ in range(extra):
        dist = g.distance_matrix
        cand = [(u, v) for u in range(n) for v in range(u + 1, n) if dist[u][v] is not None and dist[u][v] >= 4]
        if not cand:
            break
        u, v = cand[int(rng.integers(0, len(cand)))]
        g = from_edge_list(n, list(g.edges) + [(u, v)])
    return g


def all_trees(n: int) -> list[Graph]:
    """Every unlabelled tree on ``n`` vertices (networkx WROM generator)."""
    return [from_edge_list(n, t.edges()) for t in nx.nonisomorphic_trees(n)]


def girth5_corpus(seed: int = 0, max_n: int = 20, random_count: int = 200,
                  random_max_n: int = 12, tree_sizes=GIRTH5_TREE_SIZES) -> list[CorpusEntry]:
    entries = [CorpusEntry(g, "enumerated") for g in enumerate_connected_upto(DEFAULT_ENUM_MAX)
               if g.n > 1 and girth(g) >= 5]
    entries += [CorpusEntry(t, f"tree({n})") for n in tree_sizes for t in all_trees(n)]
    entries += [e for e in named_entries(max_n) if e.graph.n > 1 and girth(e.graph) >= 5]
    rng = np.random.default_rng(np.random.SeedSequence([seed, 5]))
    for _ in range(random_count):
        n = int(rng.integers(8, random_max_n + 1))
        extra = int(rng.integers(1, n // 2 + 2))
        entries.append(CorpusEntry(random_girth5_graph(n, extra, rng), f"girth5({n})"))
    return dedupe(entries)


def max_vertices(entries) -> int:
    return max(e.graph.n if isinstance(e, CorpusEntry) else e.n for e in entries)
