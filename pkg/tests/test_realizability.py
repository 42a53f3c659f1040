import itertools

import pytest

from stepcomp.competition import c12_fast, competition_graph
from stepcomp.constructors import cover_to_orientation
from stepcomp.graphs import BipartiteTournament, SimpleGraph, bt_to_digraph
from stepcomp.iso import are_isomorphic, canonical_form
from stepcomp.realizability import (
    Budget,
    CliqueCover,
    CoverSearchStats,
    find_clique_cover,
    is_c12_realizable,
    is_competition_realizable_pair,
)

K2K2 = SimpleGraph.complete(2).disjoint_union(SimpleGraph.complete(2))


def graph_classes(order):
    """One graph per isomorphism class on ``order`` vertices."""
    pairs = list(itertools.combinations(range(order), 2))
    seen = set()
    for mask in range(1 << len(pairs)):
        g = SimpleGraph.from_edges(order, [p for k, p in enumerate(pairs) if mask >> k & 1])
        key = canonical_form(g)
        if key not in seen:
            seen.add(key)
            yield g


def graphs_without_isolated(order):
    return (g for g in graph_classes(order) if all(g.adj))


def brute_force_pair(g, m):
    """Some orientation of K_{|V(g)|, m} has competition graph g ∪ K_m."""
    want = g.disjoint_union(SimpleGraph.complete(m)).edge_set()
    return any(
        competition_graph(bt_to_digraph(BipartiteTournament(g.order, m, code))).edge_set() == want
        for code in range(1 << (g.order * m))
    )


def test_clique_cover_problems():
    k3 = SimpleGraph.complete(3)
    assert CliqueCover.of(3, [[0, 1, 2]]).problems(k3) == []
    assert CliqueCover.of(3, [[0, 1]]).problems(k3) == ["edge 0-2 is not covered", "edge 1-2 is not covered"]
    p3 = SimpleGraph.path(3)
    assert "not a clique" in CliqueCover.of(3, [[0, 1, 2]]).problems(p3)[0]
    assert CliqueCover.of(4, []).problems(k3)


def test_find_clique_cover_examples():
    k5 = SimpleGraph.complete(5)
    cover = find_clique_cover(k5, 10, 4)
    assert cover is not None and len(cover) <= 10
    assert cover.problems(k5) == [] and cover.max_union() <= 4
    assert find_clique_cover(k5, 9, 4) is None
    k2 = SimpleGraph.complete(2)
    assert find_clique_cover(k2, 1, 2).cliques == (frozenset({0, 1}),)
    assert find_clique_cover(k2, 1, 1) is None
    with pytest.raises(ValueError, match="isolated"):
        find_clique_cover(SimpleGraph.empty(3), 2, 2)


def test_find_clique_cover_uses_large_cliques_when_allowed():
    k4 = SimpleGraph.complete(4)
    assert len(find_clique_cover(k4, 1, 4)) == 1
    assert find_clique_cover(k4, 1, 3) is None
    stats = CoverSearchStats()
    # a triangle together with any other clique spans all four vertices, so only
    # 2-cliques remain and six edges do not fit in three slots
    assert find_clique_cover(k4, 3, 3, stats) is None
    assert stats.nodes >= 1


def test_pair_realizability_examples():
    k5 = SimpleGraph.complete(5)
    assert is_competition_realizable_pair(k5, 9) is None
    cert = is_competition_realizable_pair(k5, 10)
    assert cert is not None
    t = cover_to_orientation(k5, cert, 10)
    assert competition_graph(bt_to_digraph(t)).edge_set() == k5.disjoint_union(SimpleGraph.complete(10)).edge_set()
    assert is_competition_realizable_pair(SimpleGraph.complete(6), 6) is not None


@pytest.mark.parametrize("n", [6, 7, 8])
def test_complete_pairs_from_six_up(n):
    kn = SimpleGraph.complete(n)
    cert = is_competition_realizable_pair(kn, n)
    assert cert is not None
    t = cover_to_orientation(kn, cert, n)
    assert competition_graph(bt_to_digraph(t)).edge_set() == kn.disjoint_union(SimpleGraph.complete(n)).edge_set()


@pytest.mark.parametrize("n", [2, 3, 4])
def test_small_complete_graphs_are_never_paired(n):
    kn = SimpleGraph.complete(n)
    for m in range(1, 51):
        assert is_competition_realizable_pair(kn, m) is None


@pytest.mark.parametrize("order", [2, 3, 4])
@pytest.mark.parametrize("m", [2, 3, 4])
def test_pair_answers_agree_with_brute_force(order, m):
    for g in graphs_without_isolated(order):
        cert = is_competition_realizable_pair(g, m)
        assert (cert is not None) == brute_force_pair(g, m), (g.edges(), m)
        if cert is not None:
            t = cover_to_orientation(g, cert, m)
            want = g.disjoint_union(SimpleGraph.complete(m)).edge_set()
            assert competition_graph(bt_to_digraph(t)).edge_set() == want


def test_single_sink_corner_case():
    # With one sink, the union bound on a clique paired with itself rejects a
    # complete g, while directing all of g into the sink realizes g ∪ K_1.
    k3 = SimpleGraph.complete(3)
    assert is_competition_realizable_pair(k3, 1) is None
    assert brute_force_pair(k3, 1)
    # non-complete graphs behave the same either way
    assert is_competition_realizable_pair(SimpleGraph.path(3), 1) is None
    assert not brute_force_pair(SimpleGraph.path(3), 1)


# -- (1,2)-step realizability ---------------------------------------------

def test_star_is_realizable_with_certificate():
    ans = is_c12_realizable(SimpleGraph.star(4))
    assert ans.realizable is True and ans.status == "realizable"
    assert (ans.certificate.m, ans.certificate.n) == (3, 2)
    assert are_isomorphic(c12_fast(ans.certificate), SimpleGraph.star(4))


def test_small_negatives():
    for h in (SimpleGraph.star(3), K2K2, SimpleGraph.path(5), SimpleGraph.cycle(5)):
        ans = is_c12_realizable(h)
        assert ans.realizable is False and not ans.indeterminate


def test_budget_exhaustion_is_indeterminate():
    ans = is_c12_realizable(SimpleGraph.path(7), Budget(max_orientations=10, max_nodes=10))
    assert ans.realizable is None and ans.indeterminate and ans.status == "indeterminate"


def test_needs_two_vertices():
    with pytest.raises(ValueError):
        is_c12_realizable(SimpleGraph.empty(1))


@pytest.mark.parametrize("code", [0, 5, 77, 300, 511, 1000, 2047, 4095])
def test_backtracking_finds_known_realizable_graphs(code):
    # every C_{1,2} is realizable by construction; backtracking must find it
    t = BipartiteTournament(4, 3, code)
    h = c12_fast(t)
    ans = is_c12_realizable(h, Budget(enumerate_up_to=0))
    assert ans.realizable is True
    assert are_isomorphic(c12_fast(ans.certificate), h)


def test_backtracking_agrees_with_enumeration_on_small_graphs():
    for order in (4, 5):
        for g in graph_classes(order):
            full = is_c12_realizable(g, Budget(enumerate_up_to=64))
            back = is_c12_realizable(g, Budget(enumerate_up_to=0))
            plain = is_c12_realizable(g, Budget(enumerate_up_to=0, use_symmetry=False))
            assert full.realizable == back.realizable == plain.realizable, g.edges()
