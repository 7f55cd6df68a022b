"""Graph value-object behavior: construction, deletion, traversal, masks."""

import itertools

import pytest
from hypothesis import given, strategies as st

from msdelta.graphs import (
    CapacityError,
    Graph,
    all_distances_from,
    bipartition,
    bits,
    component_of,
    components,
    delete,
    disjoint_union,
    distance,
    independent_submasks,
    induced,
    is_bipartite,
    is_independent,
    neighborhood,
    vlist,
    vset,
)
from strategies import random_graph_strategy


# -- construction and validation ------------------------------------------

def test_from_edges_basic():
    g = Graph.from_edges(4, [(0, 1), (1, 2), (2, 3)])
    assert g.n == 4
    assert g.adj == (0b0010, 0b0101, 0b1010, 0b0100)
    assert g.edges() == [(0, 1), (1, 2), (2, 3)]
    assert g.edge_count() == 3
    assert g.has_edge(1, 0) and not g.has_edge(0, 2)
    assert [g.degree(v) for v in range(4)] == [1, 2, 2, 1]


def test_zero_vertex_graph():
    g = Graph.empty(0)
    assert g.n == 0 and g.full == 0
    assert g.edges() == []
    assert components(g) == []


def test_rejects_self_loop():
    with pytest.raises(ValueError):
        Graph.from_edges(2, [(1, 1)])
    with pytest.raises(ValueError):
        Graph(1, (0b1,))


def test_rejects_out_of_range_edge():
    with pytest.raises(ValueError):
        Graph.from_edges(2, [(0, 2)])


def test_rejects_asymmetric_adjacency():
    with pytest.raises(ValueError):
        Graph(2, (0b10, 0b00))


def test_rejects_oversize_graph():
    with pytest.raises(CapacityError):
        Graph.empty(65)
    g1 = Graph.empty(40)
    with pytest.raises(CapacityError):
        disjoint_union(g1, Graph.empty(25))


def test_capacity_boundary_64_ok():
    g = Graph.empty(64)
    assert g.n == 64
    assert g.full == (1 << 64) - 1


def test_graphs_are_hashable_values():
    g1 = Graph.from_edges(3, [(0, 1)])
    g2 = Graph.from_edges(3, [(0, 1)])
    g3 = Graph.from_edges(3, [(0, 2)])
    assert g1 == g2 and hash(g1) == hash(g2)
    assert g1 != g3
    assert len({g1, g2, g3}) == 2


# -- mask helpers ----------------------------------------------------------

def test_vset_vlist_bits_roundtrip():
    assert vset([0, 2, 5]) == 0b100101
    assert vlist(0b100101) == [0, 2, 5]
    assert list(bits(0)) == []
    assert list(bits(0b1011)) == [0, 1, 3]


# -- deletion and relabeling ----------------------------------------------

def test_delete_relabels_in_order():
    g = Graph.from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4)])
    sub = delete(g, vset([1, 3]))
    assert sub.kept == (0, 2, 4)
    assert sub.graph.n == 3
    assert sub.graph.edges() == []
    assert sub.to_sub(vset([0, 4])) == vset([0, 2])
    assert sub.to_orig(vset([0, 2])) == vset([0, 4])


def test_delete_drops_deleted_vertices_from_mapped_sets():
    g = Graph.from_edges(4, [(0, 1), (2, 3)])
    sub = delete(g, vset([1]))
    assert sub.to_sub(vset([0, 1, 3])) == vset([0, 2])


def test_delete_nothing_and_everything():
    g = Graph.from_edges(3, [(0, 1), (1, 2)])
    assert delete(g, 0).graph == g
    assert delete(g, g.full).graph == Graph.empty(0)


def test_delete_rejects_foreign_bits():
    g = Graph.empty(3)
    with pytest.raises(ValueError):
        delete(g, 0b1000)


@given(random_graph_strategy(), st.data())
def test_delete_preserves_surviving_edges(g, data):
    w = data.draw(st.integers(min_value=0, max_value=g.full))
    sub = delete(g, w)
    # surviving pairs keep exactly their original adjacency
    for a, b in itertools.combinations(range(sub.graph.n), 2):
        assert sub.graph.has_edge(a, b) == g.has_edge(sub.kept[a], sub.kept[b])


@given(random_graph_strategy(), st.data())
def test_to_sub_to_orig_inverse_on_survivors(g, data):
    w = data.draw(st.integers(min_value=0, max_value=g.full))
    sub = delete(g, w)
    m = data.draw(st.integers(min_value=0, max_value=g.full)) & ~w
    assert sub.to_orig(sub.to_sub(m)) == m


def test_induced_complements_delete():
    g = Graph.from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
    keep = vset([0, 1, 3])
    assert induced(g, keep) == delete(g, g.full & ~keep)


# -- neighborhoods ---------------------------------------------------------

def test_neighborhood_is_raw_union():
    g = Graph.from_edges(3, [(0, 1), (1, 2)])
    # N({0,1}) includes 1 itself because 0 and 1 are adjacent
    assert neighborhood(g, vset([0, 1])) == vset([0, 1, 2])
    assert neighborhood(g, vset([0])) == vset([1])
    assert neighborhood(g, 0) == 0


# -- components, distance, bipartition ------------------------------------

def test_components_ordered_by_min_vertex():
    g = Graph.from_edges(6, [(1, 4), (2, 5), (0, 3)])
    assert components(g) == [vset([0, 3]), vset([1, 4]), vset([2, 5])]
    assert component_of(g, 4) == vset([1, 4])


@given(random_graph_strategy())
def test_components_partition_vertices(g):
    comps = components(g)
    union = 0
    for c in comps:
        assert c, "empty component"
        assert union & c == 0, "overlapping components"
        union |= c
    assert union == g.full


def test_distance_path_and_disconnected():
    g = Graph.from_edges(5, [(0, 1), (1, 2), (2, 3)])
    assert distance(g, 0, 3) == 3
    assert distance(g, 0, 0) == 0
    assert distance(g, 0, 4) is None
    assert all_distances_from(g, 0) == [0, 1, 2, 3, None]


@given(random_graph_strategy(), st.data())
def test_distance_symmetric(g, data):
    if g.n == 0:
        return
    u = data.draw(st.integers(min_value=0, max_value=g.n - 1))
    v = data.draw(st.integers(min_value=0, max_value=g.n - 1))
    assert distance(g, u, v) == distance(g, v, u)


def test_bipartition_even_cycle_and_odd_cycle():
    c4 = Graph.from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
    assert bipartition(c4) == (0, 1, 0, 1)
    c5 = Graph.from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)])
    assert bipartition(c5) is None
    assert is_bipartite(c4) and not is_bipartite(c5)


@given(random_graph_strategy())
def test_bipartition_is_proper_when_found(g):
    color = bipartition(g)
    if color is None:
        return
    for u, v in g.edges():
        assert color[u] != color[v]


@given(random_graph_strategy())
def test_nonbipartite_exactly_when_odd_closed_walk(g):
    # parity-reachability: bipartite iff no vertex reaches itself oddly
    even = [1 << v for v in range(g.n)]
    odd = [0] * g.n
    for _ in range(2 * g.n + 1):
        new_even, new_odd = [], []
        for v in range(g.n):
            grow_odd = odd[v]
            grow_even = even[v]
            for u in bits(g.adj[v]):
                grow_odd |= even[u]
                grow_even |= odd[u]
            new_even.append(grow_even)
            new_odd.append(grow_odd)
        even, odd = new_even, new_odd
    has_odd_self = any(odd[v] >> v & 1 for v in range(g.n))
    assert is_bipartite(g) == (not has_odd_self)


# -- disjoint union --------------------------------------------------------

def test_disjoint_union_shifts_second_block():
    g1 = Graph.from_edges(2, [(0, 1)])
    g2 = Graph.from_edges(3, [(0, 2)])
    u = disjoint_union(g1, g2)
    assert u.n == 5
    assert u.edges() == [(0, 1), (2, 4)]
    assert components(u) == [vset([0, 1]), vset([2, 4]), vset([3])]


# -- independence helpers --------------------------------------------------

def test_is_independent():
    g = Graph.from_edges(3, [(0, 1)])
    assert is_independent(g, 0)
    assert is_independent(g, vset([0, 2]))
    assert not is_independent(g, vset([0, 1]))


@given(random_graph_strategy(max_n=7), st.data())
def test_independent_submasks_match_bruteforce(g, data):
    u = data.draw(st.integers(min_value=0, max_value=g.full))
    got = list(independent_submasks(g, u))
    want = []
    members = vlist(u)
    for r in range(len(members) + 1):
        for combo in itertools.combinations(members, r):
            m = vset(combo)
            if is_independent(g, m):
                want.append(m)
    assert sorted(got) == sorted(want)
    assert got == sorted(got), "ascending order"
    assert got[0] == 0, "empty set first"
