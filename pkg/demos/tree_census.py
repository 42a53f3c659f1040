"""
Which trees are (1,2)-step competition graphs?
==============================================

Trees are generated up to isomorphism in two independent ways, then each is
tested against every split of its vertices into two partite sets.
"""

from stepcomp import Budget, SimpleGraph, is_c12_realizable
from stepcomp.trees import trees_by_leaf_addition, trees_by_pruefer
from stepcomp.verify import tree_census

for p in range(1, 9):
    print(p, len(trees_by_leaf_addition(p)), len(trees_by_pruefer(p)))

for p in range(2, 8):
    for t in trees_by_leaf_addition(p):
        ans = is_c12_realizable(t)
        if ans.realizable:
            print("realizable:", t.edges(), "via", ans.certificate.m, "x", ans.certificate.n,
                  ans.certificate.bitstring())

print(tree_census(7).render())

# a tiny budget gives an honest "indeterminate" instead of a wrong "no"
print(is_c12_realizable(SimpleGraph.path(7), Budget(max_orientations=50, max_nodes=50)).status)
