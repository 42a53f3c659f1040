"""
The two small witnesses
=======================

An orientation of K_{3,2} whose (1,2)-step competition graph is the star
K_{1,4}, and an orientation of K_{4,3} whose graph has diameter three.
"""

from stepcomp import c12_fast, competition_graph, bt_to_digraph, explain_edge, fig2_witness, star_witness
from stepcomp.structure import components, diameter, has_edge_sharing_triangles, triangle_count
from stepcomp.textio import to_dot

# rows x1..x3, columns y1..y2; a 1 means the arc goes from x to y
star = star_witness()
print("star orientation:", star.bitstring())

g = c12_fast(star)
print("C12 edges:", g.edges())
print("plain competition graph edges:", competition_graph(bt_to_digraph(star)).edges())

# every edge comes with a reason
for u, v in g.edges():
    w = explain_edge(star, u, v)
    if w.arc_from is None:
        why = f"both beat {star.label(w.w)}"
    else:
        why = (f"{star.label(w.arc_from)} -> {star.label(w.w)} and "
               f"{star.label(w.walk_from)} -> {star.label(w.via)} -> {star.label(w.w)}")
    print(f"  {star.label(u)}-{star.label(v)}: {why}")

# the second witness is larger and its component is as wide as the theory allows
fig2 = fig2_witness()
h = c12_fast(fig2)
(comp,) = [c for c in components(h) if len(c) > 1]
print("\n4x3 witness:", fig2.bitstring())
print("edges:", h.num_edges, "diameter:", diameter(h, comp))
print("triangles:", triangle_count(h), "edge-sharing triangles:", has_edge_sharing_triangles(h))

print("\nDOT for the star orientation:")
print(to_dot(star))
