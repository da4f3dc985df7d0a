import networkx as nx
import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from graphgeom import families
from graphgeom.canon import are_isomorphic, canonical_key, enumerate_connected, enumerate_connected_upto
from graphgeom.graph import (DiGraph, Graph, GraphError, Orientation, adjacency_matrix, augment,
                             connected_components, degree_matrix, disjoint_union, from_edge_list,
                             incidence_matrix, orient_random, pad, permute, random_graph,
                             random_orientation)
from graphgeom.graph6 import (Graph6Error, from_edge_list_text, from_graph6, read_graph6_file,
                              to_edge_list_text, to_graph6, write_graph6_file)
from graphgeom.invariants import diameter, girth, is_planar
from graphgeom.spectra import laplacian, laplacian_spectrum

from oracles import to_nx

DIAMOND_A = [[0, 0, 1, 1], [0, 0, 1, 1], [1, 1, 0, 1], [1, 1, 1, 0]]
DIAMOND_D = [2, 2, 3, 3]
DIAMOND_NABLA = [[-1, 0, 1, 0], [-1, 0, 0, 1], [0, 0, 1, -1], [0, 1, 0, -1], [0, 1, -1, 0]]


@st.composite
def graphs(draw, max_n=9):
    n = draw(st.integers(0, max_n))
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return from_edge_list(n, chosen)


# ---------------------------------------------------------------- construction


def test_edges_are_normalised_and_deduplicated():
    g = from_edge_list(3, [(1, 0), (0, 1), (2, 1)])
    assert g.edges == ((0, 1), (1, 2))
    assert g.degrees == (1, 2, 1)


@pytest.mark.parametrize("pairs", [[(0, 0)], [(0, 5)], [(-1, 0)]])
def test_invalid_pairs_rejected(pairs):
    with pytest.raises(GraphError):
        from_edge_list(3, pairs)


def test_graph_constructor_validates_invariants():
    with pytest.raises(GraphError):
        Graph(3, ((1, 0),))
    with pytest.raises(GraphError):
        Graph(3, ((1, 2), (0, 1)))
    with pytest.raises(GraphError):
        Graph(3, ((0, 1),), weights=(0,))


def test_digraph_rejects_loops_and_duplicates():
    with pytest.raises(GraphError):
        DiGraph(2, ((0, 0),))
    with pytest.raises(GraphError):
        DiGraph(2, ((0, 1), (0, 1)))
    d = DiGraph.from_arrows(3, [(2, 0), (0, 1), (2, 0)])
    assert d.arrows == ((0, 1), (2, 0))
    assert d.underlying().edges == ((0, 1), (0, 2))


def test_disjoint_union_counts_components():
    g = disjoint_union(families.cycle(4), families.path(2), families.complete(1))
    assert g.n == 8 and connected_components(g) == 3


# ---------------------------------------------------------------- matrices


def test_diamond_adjacency_degree_and_incidence_match_printout():
    g = families.diamond()
    assert adjacency_matrix(g).tolist() == DIAMOND_A
    assert np.diag(degree_matrix(g)).tolist() == DIAMOND_D
    o, rows = families.diamond_orientation()
    assert incidence_matrix(o, rows).tolist() == DIAMOND_NABLA


def test_incidence_row_order_must_match_arrows():
    o, _ = families.diamond_orientation()
    with pytest.raises(GraphError):
        incidence_matrix(o, [(0, 2)])


@given(graphs(), st.integers(0, 2 ** 32 - 1))
@settings(max_examples=60, deadline=None)
def test_incidence_square_is_laplacian_for_any_orientation(g, seed):
    nabla = incidence_matrix(random_orientation(g, seed))
    assert np.array_equal(nabla.T @ nabla, degree_matrix(g) - adjacency_matrix(g))


def test_orientation_validates_heads():
    g = families.path(1)
    with pytest.raises(GraphError):
        Orientation(g, (5,))
    with pytest.raises(GraphError):
        Orientation.from_arrows(g, [(0, 1), (1, 2)])


def test_orient_random_keeps_underlying_graph():
    g = families.petersen()
    d = orient_random(g, 3)
    assert d.underlying() == g
    assert orient_random(g, 3) == d


def test_weighted_adjacency():
    g = from_edge_list(3, [(0, 1), (1, 2)], weights={(1, 0): 2, (1, 2): 0.5})
    a = adjacency_matrix(g, weighted=True)
    assert a[0, 1] == 2 and a[2, 1] == 0.5


# ---------------------------------------------------------------- named families


def test_family_sizes():
    assert (families.cycle(6).n, families.cycle(6).m) == (6, 6)
    assert families.path(4).n == 5
    assert families.star(5).degrees[0] == 5
    assert [families.extended_star(i).n for i in (1, 2, 3)] == [5, 6, 7]
    assert families.petersen().m == 15
    assert families.dodecahedral().n == 20
    assert families.triplex().n == 12 and set(families.triplex().degrees) == {3}
    hd = families.half_dodecahedral()
    assert (hd.n, hd.m) == (15, 20) and sorted(set(hd.degrees)) == [2, 3]


def test_cycle_six_is_two_regular_with_girth_six():
    g = families.cycle(6)
    assert set(g.degrees) == {2}
    assert girth(g) == 6


def test_exceptional_cubic_graphs_have_girth_five():
    for g in (families.petersen(), families.dodecahedral(), families.triplex(), families.half_dodecahedral()):
        assert girth(g) == 5
        assert nx.is_connected(to_nx(g))


def test_named_graphs_match_networkx_constructions():
    assert are_isomorphic(families.petersen(), from_edge_list(10, nx.petersen_graph().edges))
    assert are_isomorphic(families.dodecahedral(), from_edge_list(20, nx.dodecahedral_graph().edges))
    assert are_isomorphic(families.octahedral(), from_edge_list(6, nx.octahedral_graph().edges))
    cube = nx.convert_node_labels_to_integers(nx.hypercube_graph(3))
    assert are_isomorphic(families.cube(), from_edge_list(8, cube.edges))


def test_named_lookup_errors():
    assert families.named("cycle", 5) == families.cycle(5)
    with pytest.raises(GraphError):
        families.named("no_such_family")
    with pytest.raises(GraphError):
        families.named("cycle")
    with pytest.raises(GraphError):
        families.cycle(2)


def test_octahedral_and_bipartite_laplacians_match_printouts():
    octa = [[4, -1, -1, -1, -1, 0], [-1, 4, -1, -1, 0, -1], [-1, -1, 4, 0, -1, -1],
            [-1, -1, 0, 4, -1, -1], [-1, 0, -1, -1, 4, -1], [0, -1, -1, -1, -1, 4]]
    assert laplacian(families.octahedral()).astype(int).tolist() == octa
    k54 = laplacian(families.complete_bipartite(5, 4)).astype(int)
    assert k54[:4, :4].tolist() == (5 * np.eye(4, dtype=int)).tolist()
    assert k54[4:, 4:].tolist() == (4 * np.eye(5, dtype=int)).tolist()
    assert (k54[:4, 4:] == -1).all() and (k54[4:, :4] == -1).all()


# ---------------------------------------------------------------- permute / augment / pad


@given(graphs(), st.randoms(use_true_random=False))
@settings(max_examples=40, deadline=None)
def test_permute_preserves_invariants(g, rnd):
    perm = list(range(g.n))
    rnd.shuffle(perm)
    h = permute(g, perm)
    assert sorted(h.degrees) == sorted(g.degrees)
    assert girth(h) == girth(g)
    assert diameter(h) == diameter(g)
    assert is_planar(h) == is_planar(g)
    assert np.allclose(laplacian_spectrum(h).values, laplacian_spectrum(g).values, atol=1e-9)
    assert are_isomorphic(g, h)


def test_permute_rejects_non_permutations():
    with pytest.raises(GraphError):
        permute(families.path(2), [0, 0, 1])


def test_augment_is_reproducible_and_deduplicated():
    g = families.cycle(5)
    a, b = augment(g, 200, seed=7), augment(g, 200, seed=7)
    assert a == b
    # C5 has 5!/10 = 12 distinct labellings
    assert len(a) == 12
    assert len({h.edges for h in a}) == len(a)
    assert all(are_isomorphic(g, h) for h in a)
    assert augment(g, 0, seed=1) == []
    with pytest.raises(GraphError):
        augment(g, -1, seed=1)


def test_pad_block_and_row_sums():
    g = families.star(3)
    p = pad(g, 6)
    assert p.entries.shape == (6, 6)
    assert p.entries[:4, :4].sum(axis=1).tolist() == list(g.degrees)
    assert p.entries[4:].sum() == 0 and p.entries[:, 4:].sum() == 0
    assert p.flatten().shape == (36,)
    with pytest.raises(GraphError):
        pad(g, 3)


def test_random_graph_is_seeded():
    assert random_graph(12, 0.4, 5) == random_graph(12, 0.4, 5)
    assert random_graph(5, 1.0, 0).m == 10
    assert random_graph(5, 0.0, 0).m == 0
    with pytest.raises(GraphError):
        random_graph(5, 1.5, 0)


# ---------------------------------------------------------------- graph6


def test_graph6_known_strings():
    assert to_graph6(families.complete(4)) == "C~"
    assert to_graph6(families.path(0)) == "@"
    assert from_graph6(">>graph6<<C~") == families.complete(4)
    assert are_isomorphic(from_graph6(to_graph6(families.petersen())), families.petersen())


@given(graphs(max_n=20))
@settings(max_examples=80, deadline=None)
def test_graph6_round_trip_property(g):
    assert from_graph6(to_graph6(g)) == g


def test_graph6_matches_networkx_encoder():
    for g in (families.petersen(), families.dipyramid(5), random_graph(70, 0.1, 1)):
        ours = to_graph6(g)
        theirs = nx.to_graph6_bytes(to_nx(g), header=False).decode().strip()
        assert ours == theirs


@pytest.mark.parametrize("bad", ["", "C", "C~~", "C\x20"])
def test_graph6_malformed(bad):
    with pytest.raises(Graph6Error):
        from_graph6(bad)


def test_graph6_file_round_trip(tmp_path):
    gs = [families.cycle(5), families.petersen()]
    write_graph6_file(tmp_path / "g.g6", gs)
    assert read_graph6_file(tmp_path / "g.g6") == gs


def test_edge_list_text_round_trip():
    g = families.diamond()
    assert from_edge_list_text(to_edge_list_text(g)) == g


# ---------------------------------------------------------------- canonical form and enumeration


def test_canonical_key_is_isomorphism_invariant():
    rng = np.random.default_rng(0)
    for _ in range(30):
        g = random_graph(int(rng.integers(1, 11)), 0.35, int(rng.integers(1 << 30)))
        h = permute(g, rng.permutation(g.n))
        assert canonical_key(g) == canonical_key(h)


def test_canonical_key_separates_non_isomorphic():
    assert canonical_key(families.cycle(6)) != canonical_key(disjoint_union(families.cycle(3), families.cycle(3)))
    assert not are_isomorphic(families.petersen(), families.generalized_petersen(5, 1))


@pytest.mark.parametrize("n,count", [(1, 1), (2, 1), (3, 2), (4, 6), (5, 21), (6, 112)])
def test_enumeration_counts_small(n, count):
    assert len(enumerate_connected(n)) == count


def test_enumeration_matches_networkx_atlas(small_corpus):
    atlas = [g for g in nx.graph_atlas_g()[1:] if nx.is_connected(g)]
    atlas_keys = {canonical_key(from_edge_list(g.number_of_nodes(), g.edges)) for g in atlas}
    ours = {canonical_key(g) for g in small_corpus}
    assert len(ours) == len(small_corpus) == len(atlas_keys)
    assert ours == atlas_keys


def test_enumeration_cap_is_enforced():
    with pytest.raises(GraphError):
        enumerate_connected(8)
    with pytest.raises(GraphError):
        enumerate_connected(0)


def test_enumeration_is_deterministic():
    assert enumerate_connected(5) == enumerate_connected(5)
    assert [g.n for g in enumerate_connected_upto(4)] == [1, 2, 3, 3] + [4] * 6
