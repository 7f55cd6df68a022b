"""Graph population streams: counts, family predicates, determinism."""

import itertools

import pytest

from msdelta.graphs import CapacityError, Graph, is_bipartite
from msdelta.families import (
    GraphFamily,
    all_labeled,
    canonical_dedup,
    canonical_key,
    complete_graph,
    cycle_graph,
    edge_mask_of,
    graph_from_edge_mask,
    is_connected,
    labeled_count,
    path_graph,
    star_graph,
    tree_from_pruefer,
)


def brute_isomorphic(g1, g2):
    if g1.n != g2.n:
        return False
    e1 = set(g1.edges())
    for perm in itertools.permutations(range(g1.n)):
        mapped = {tuple(sorted((perm[u], perm[v]))) for u, v in e1}
        if mapped == set(g2.edges()):
            return True
    return False


# -- exhaustive enumeration ------------------------------------------------

def test_all_labeled_counts():
    assert len(list(all_labeled(2))) == 2 == labeled_count(2)
    assert len(list(all_labeled(3))) == 8 == labeled_count(3)
    assert len(list(all_labeled(4))) == 64 == labeled_count(4)


def test_all_labeled_ascending_and_distinct():
    graphs = list(all_labeled(3))
    masks = [edge_mask_of(g) for g in graphs]
    assert masks == list(range(8))


def test_all_labeled_cap():
    with pytest.raises(CapacityError):
        next(all_labeled(9))


def test_edge_mask_roundtrip():
    for mask in range(64):
        g = graph_from_edge_mask(4, mask)
        assert edge_mask_of(g) == mask
    with pytest.raises(ValueError):
        graph_from_edge_mask(3, 8)


# -- fixed shapes ----------------------------------------------------------

def test_shape_constructors():
    assert path_graph(4).edges() == [(0, 1), (1, 2), (2, 3)]
    assert cycle_graph(5).edge_count() == 5
    assert complete_graph(4).edge_count() == 6
    assert star_graph(3).degree(0) == 3
    with pytest.raises(ValueError):
        cycle_graph(2)


# -- Pruefer decoding ------------------------------------------------------

def test_pruefer_bijection_small_n():
    # Cayley: n^(n-2) labeled trees, and decoding is a bijection onto them
    for n in (3, 4, 5):
        seen = set()
        for seq in itertools.product(range(n), repeat=n - 2):
            t = tree_from_pruefer(n, seq)
            assert t.edge_count() == n - 1
            assert is_connected(t)
            seen.add(edge_mask_of(t))
        assert len(seen) == n ** (n - 2)


def test_pruefer_degenerate_sizes():
    assert tree_from_pruefer(1, []) == Graph.empty(1)
    assert tree_from_pruefer(2, []) == Graph.from_edges(2, [(0, 1)])
    with pytest.raises(ValueError):
        tree_from_pruefer(4, [0])


# -- family streams --------------------------------------------------------

def test_exhaustive_kind_filters():
    bip = list(GraphFamily("bipartite", n=4).graphs())
    non = list(GraphFamily("nonbipartite", n=4).graphs())
    assert all(is_bipartite(g) for g in bip)
    assert not any(is_bipartite(g) for g in non)
    assert len(bip) + len(non) == 64
    conn = list(GraphFamily("connected", n=4).graphs())
    assert all(is_connected(g) for g in conn)
    assert len(conn) == 38  # connected labeled graphs on 4 vertices


def test_fixed_kinds_emit_single_member():
    assert list(GraphFamily("paths", n=4).graphs()) == [path_graph(4)]
    assert list(GraphFamily("cycles", n=5).graphs()) == [cycle_graph(5)]


def test_tree_family_outputs_are_trees():
    out = list(GraphFamily("trees", n=6, seed=7, count=25).graphs())
    assert len(out) == 25
    for t in out:
        assert t.edge_count() == 5 and is_connected(t)


def test_unicyclic_family_outputs():
    for g in GraphFamily("unicyclic", n=7, seed=3, count=25).graphs():
        assert g.edge_count() == 7 and is_connected(g)


def test_bipartite_unicyclic_family_outputs():
    for g in GraphFamily("bipartite-unicyclic", n=7, seed=3, count=25).graphs():
        assert g.edge_count() == 7 and is_connected(g) and is_bipartite(g)


def test_gnp_extremes_and_bipartite_gnp():
    assert list(GraphFamily("gnp", n=5, p=0.0, seed=1, count=2).graphs()) == [
        Graph.empty(5),
        Graph.empty(5),
    ]
    assert all(
        g == complete_graph(5)
        for g in GraphFamily("gnp", n=5, p=1.0, seed=1, count=2).graphs()
    )
    for g in GraphFamily("bipartite-gnp", n=8, p=0.6, seed=11, count=20).graphs():
        assert is_bipartite(g)


def test_streams_deterministic_given_seed():
    for kind in ("trees", "unicyclic", "bipartite-unicyclic", "gnp", "bipartite-gnp"):
        fam = GraphFamily(kind, n=6, p=0.4, seed=42, count=15)
        assert list(fam.graphs()) == list(fam.graphs())
        other = GraphFamily(kind, n=6, p=0.4, seed=43, count=15)
        assert list(fam.graphs()) != list(other.graphs())


def test_family_parameter_validation():
    with pytest.raises(ValueError, match="unknown family"):
        GraphFamily("wheels", n=5)
    with pytest.raises(ValueError, match="probability"):
        GraphFamily("gnp", n=5, p=1.5)
    with pytest.raises(ValueError, match="at least 3"):
        GraphFamily("cycles", n=2)
    with pytest.raises(ValueError, match="negative"):
        GraphFamily("trees", n=5, count=-1)


# -- isomorphism reduction -------------------------------------------------

def test_dedup_class_counts():
    assert len(list(canonical_dedup(all_labeled(3), 3))) == 4
    assert len(list(canonical_dedup(all_labeled(4), 4))) == 11


def test_dedup_representatives_are_pairwise_nonisomorphic():
    reps = list(canonical_dedup(all_labeled(4), 4))
    for g1, g2 in itertools.combinations(reps, 2):
        assert not brute_isomorphic(g1, g2)
    # and every labeled graph matches some representative
    for g in all_labeled(4):
        assert any(brute_isomorphic(g, r) for r in reps)


def test_dedup_single_graph_passthrough():
    g = cycle_graph(5)
    assert list(canonical_dedup([g], 5)) == [g]


def test_canonical_key_invariant_under_relabeling():
    g = Graph.from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 2)])
    perm = (2, 0, 4, 1, 3)
    relabeled = Graph.from_edges(5, [(perm[u], perm[v]) for u, v in g.edges()])
    assert canonical_key(g) == canonical_key(relabeled)


def test_dedup_cap():
    with pytest.raises(CapacityError):
        next(canonical_dedup(iter([Graph.empty(8)]), 8))
