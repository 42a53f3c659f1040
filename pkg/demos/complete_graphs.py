"""
When is a complete graph a (1,2)-step competition graph?
========================================================

K_l is realizable exactly from l = 12 on.  The construction splits the
vertices into a K_n side and a K_m side and needs an edge clique cover of K_n
by at most m cliques, any two of which leave a vertex uncovered.
"""

from stepcomp import (
    SimpleGraph,
    UnsupportedParameters,
    bt_to_digraph,
    c12_fast,
    competition_graph,
    complete_c12_witness,
    cover_to_orientation,
    find_clique_cover,
    is_competition_realizable_pair,
)

# K_5 needs ten 2-cliques: any clique of size three or more together with
# another clique would cover all five vertices
k5 = SimpleGraph.complete(5)
print("(K_5, K_9):", is_competition_realizable_pair(k5, 9))
cover = is_competition_realizable_pair(k5, 10)
print("(K_5, K_10):", sorted(sorted(c) for c in cover.cliques))
t = cover_to_orientation(k5, cover, 10)
print("competition graph edges:", competition_graph(bt_to_digraph(t)).num_edges, "= 10 + 45")

# from six vertices on a balanced cover exists
for n in range(6, 9):
    c = find_clique_cover(SimpleGraph.complete(n), n, n - 1)
    print(f"K_{n}: {len(c)} cliques of sizes {sorted(len(s) for s in c.cliques)}")

for l in (11, 12, 13, 16):
    try:
        w = complete_c12_witness(l)
    except UnsupportedParameters as exc:
        print(f"l = {l}: {exc}")
        continue
    g = c12_fast(w)
    print(f"l = {l}: {w.m}x{w.n} orientation, {g.num_edges} edges")
