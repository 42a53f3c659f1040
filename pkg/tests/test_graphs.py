import itertools

import pytest

from stepcomp.graphs import (
    BipartiteTournament,
    Digraph,
    SimpleGraph,
    bt_from_digraph,
    bt_from_matrix,
    bt_to_digraph,
    in_neighbors,
    orientation_masks,
    out_neighbors,
    outdegree,
    reverse_bits,
)


def test_from_edges_and_queries():
    g = SimpleGraph.from_edges(4, [(0, 1), (2, 1), (2, 3)])
    assert g.edges() == [(0, 1), (1, 2), (2, 3)]
    assert g.neighbors(1) == {0, 2}
    assert g.degrees() == [1, 2, 2, 1]
    assert g.num_edges == 3
    assert g.has_edge(3, 2) and not g.has_edge(0, 3)


def test_simple_graph_rejects_loops_and_bad_vertices():
    with pytest.raises(ValueError):
        SimpleGraph.from_edges(3, [(1, 1)])
    with pytest.raises(ValueError):
        SimpleGraph.from_edges(3, [(0, 3)])
    with pytest.raises(ValueError):
        SimpleGraph(2, (0b10, 0))  # asymmetric


def test_named_graphs():
    assert SimpleGraph.complete(5).num_edges == 10
    assert SimpleGraph.cycle(5).degrees() == [2] * 5
    assert SimpleGraph.path(4).num_edges == 3
    assert SimpleGraph.star(4).degrees() == [4, 1, 1, 1, 1]


def test_disjoint_union_shifts_second_graph():
    g = SimpleGraph.complete(2).disjoint_union(SimpleGraph.complete(3))
    assert g.edges() == [(0, 1), (2, 3), (2, 4), (3, 4)]


def test_induced_relabels_in_given_order():
    g = SimpleGraph.path(4)  # 0-1-2-3
    h = g.induced([3, 2, 0])
    assert h.edges() == [(0, 1)]


def test_digraph_neighbourhoods():
    d = Digraph.from_arcs(3, [(0, 1), (1, 2), (2, 0), (0, 2)])
    assert out_neighbors(d, 0) == {1, 2}
    assert in_neighbors(d, 2) == {0, 1}
    assert outdegree(d, 1) == 1
    assert d.num_arcs == 4
    with pytest.raises(ValueError):
        outdegree(d, 3)


def test_figure_one_encoding():
    # rows x1..x3 = 10, 11, 01
    t = bt_from_matrix(3, 2, "101101")
    assert t.code == 0b101101
    assert [t.bit(i, j) for i in range(3) for j in range(2)] == [1, 0, 1, 1, 0, 1]
    d = bt_to_digraph(t)
    assert sorted(d.arcs()) == [(0, 3), (1, 3), (1, 4), (2, 4), (3, 2), (4, 0)]
    assert t.outdegrees() == [1, 2, 1, 1, 1]
    assert t.label(0) == "x1" and t.label(4) == "y2"


def test_bt_from_matrix_validates():
    with pytest.raises(ValueError):
        bt_from_matrix(2, 2, "101")
    with pytest.raises(ValueError):
        bt_from_matrix(2, 2, [1, 0, 2, 0])


@pytest.mark.parametrize("m,n", [(1, 1), (2, 3), (3, 2), (3, 4), (4, 3), (2, 6), (6, 2), (1, 12)])
def test_matrix_round_trip_exhaustive(m, n):
    for code in range(1 << (m * n)):
        t = BipartiteTournament(m, n, code)
        again = bt_from_matrix(m, n, t.bitstring())
        assert again == t
        d = bt_to_digraph(t)
        assert d.num_arcs == m * n
        assert bt_from_digraph(d, m) == t
        und = d.underlying()
        assert all(not und.has_edge(a, b) for a, b in itertools.combinations(range(m), 2))


def test_orientation_masks_agree_with_bits():
    t = bt_from_matrix(3, 4, "100101101110")
    rows, cols = orientation_masks(t.code, 3, 4)
    for i in range(3):
        for j in range(4):
            assert (rows[i] >> j & 1) == t.bit(i, j)
            assert (cols[j] >> i & 1) == 1 - t.bit(i, j)


def test_swap_sides_is_an_involution_and_relabels_arcs():
    t = bt_from_matrix(3, 2, "101101")
    s = t.swap_sides()
    assert (s.m, s.n) == (2, 3)
    assert s.swap_sides() == t
    for i in range(3):
        for j in range(2):
            assert s.bit(j, i) == 1 - t.bit(i, j)


def test_reverse_bits():
    assert reverse_bits(0b0011, 4) == 0b1100
    assert reverse_bits(0b1, 20) == 1 << 19
