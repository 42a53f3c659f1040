"""Builders for the explicit bipartite tournaments used as witnesses.

Vertex ids follow :mod:`stepcomp.graphs`: V1 rows first, then V2 columns.
"""

from __future__ import annotations

from itertools import combinations
from math import ceil

from .graphs import BipartiteTournament, SimpleGraph, bt_from_matrix
from .realizability import CliqueCover, find_clique_cover

#: x1->y1, y2->x1, x2->y1, x2->y2, y1->x3, x3->y2; C_{1,2} is a star at x2
STAR_BITS = "101101"
#: rows x1..x4 over columns y1..y3; C_{1,2} has diameter three
FIG2_BITS = "010010101101"
#: the directed 4-cycle u0 -> w0 -> u1 -> w1 -> u0
FOUR_CYCLE_BITS = "1001"


class UnsupportedParameters(ValueError):
    """The requested object provably does not exist."""


def star_witness() -> BipartiteTournament:
    return bt_from_matrix(3, 2, STAR_BITS)


def fig2_witness() -> BipartiteTournament:
    return bt_from_matrix(4, 3, FIG2_BITS)


def disjoint_union_witness(m: int, n: int) -> BipartiteTournament:
    """Tournament whose ``C_{1,2}`` is ``K_m ∪ K_n`` (``m >= n``, ``n != 2``).

    ``n = 1``: ``K_{m,1}`` with every arc into the single V2 vertex.
    ``n >= 3``: ``K_{m+n-2,2}`` with V2 = ``{v, w}`` (columns 0, 1) and V1 =
    ``v_1..v_{m-1}`` followed by ``w_1..w_{n-1}``; arcs ``v_i -> w -> w_i -> v -> v_i``.
    The components are ``{v, v_i}`` and ``{w, w_i}``.
    """
    if n < 1 or m < n:
        raise ValueError(f"need m >= n >= 1, got m={m}, n={n}")
    if n == 2:
        raise UnsupportedParameters("K_m ∪ K_2 is never a (1,2)-step competition graph (requires n != 2)")
    if n == 1:
        return bt_from_matrix(m, 1, [1] * m)
    rows = [[0, 1]] * (m - 1) + [[1, 0]] * (n - 1)
    return bt_from_matrix(m + n - 2, 2, [b for r in rows for b in r])


def pair_k10_k5_witness(m: int) -> BipartiteTournament:
    """Orientation of ``K_{m,5}`` whose competition graph is ``K_m ∪ K_5``.

    The first ten X-vertices are indexed by the pairs of Y and are entered by
    exactly that pair; every other arc goes from X to Y.
    """
    if m < 10:
        raise ValueError(f"need m >= 10, got {m}")
    pairs = list(combinations(range(5), 2))
    bits = []
    for x in range(m):
        pair = pairs[x] if x < len(pairs) else ()
        bits.extend(0 if y in pair else 1 for y in range(5))
    return bt_from_matrix(m, 5, bits)


def cover_to_orientation(g: SimpleGraph, cover: CliqueCover, m: int) -> BipartiteTournament:
    """Orientation of ``K_{|V(g)|, m}`` whose competition graph is ``g ∪ K_m``.

    V2 vertex ``k`` is entered exactly by the clique ``S_k``; slots past the end
    of the cover get the empty clique.  The m-side is complete iff any two slots
    leave some vertex of ``g`` uncovered, which is what is checked.
    """
    if any(not nb for nb in g.adj):
        raise ValueError("g has isolated vertices")
    issues = cover.problems(g)
    if issues:
        raise ValueError("not an edge clique cover: " + "; ".join(issues))
    if len(cover) > m:
        raise ValueError(f"cover has {len(cover)} cliques but only {m} sink vertices")
    slots = list(cover.cliques) + [frozenset()] * (m - len(cover))
    limit = g.order - 1
    for a, b in combinations(range(m), 2):
        if len(slots[a] | slots[b]) > limit:
            raise ValueError(
                f"cliques {sorted(slots[a])} and {sorted(slots[b])} cover {len(slots[a] | slots[b])} "
                f"vertices; at most {limit} allowed"
            )
    bits = [1 if v in slots[k] else 0 for v in range(g.order) for k in range(m)]
    return bt_from_matrix(g.order, m, bits)


def complete_c12_witness(l: int) -> BipartiteTournament:
    """Tournament with ``C_{1,2} = K_l`` (``l >= 12``), sides ``⌊l/2⌋`` and ``⌈l/2⌉``."""
    if l < 12:
        raise UnsupportedParameters(f"K_{l} is not a (1,2)-step competition graph (requires l >= 12)")
    m, n = ceil(l / 2), l // 2
    kn = SimpleGraph.complete(n)
    cover = find_clique_cover(kn, m, n - 1)
    if cover is None:
        raise RuntimeError(f"no clique cover of K_{n} with {m} cliques; (K_{m}, K_{n}) should be realizable")
    return cover_to_orientation(kn, cover, m)


def min_edge_witness(m: int, n: int) -> BipartiteTournament:
    """Orientation of ``K_{m,n}`` (``m >= n``) whose ``C_{1,2}`` has the fewest edges.

    ``(2, 2)`` gives the directed 4-cycle; otherwise every arc runs from V2 to
    V1, so V2 becomes a clique and V1 is isolated.
    """
    if n < 1 or m < n:
        raise ValueError(f"need m >= n >= 1, got m={m}, n={n}")
    if (m, n) == (2, 2):
        return bt_from_matrix(2, 2, FOUR_CYCLE_BITS)
    return BipartiteTournament(m, n, 0)
