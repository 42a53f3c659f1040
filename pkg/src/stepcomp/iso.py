"""Isomorphism testing and canonical forms for small graphs.

Both rest on colour refinement (1-dimensional Weisfeiler-Leman).  Colours are
kept as ranks of sorted signatures, so a refined colouring is invariant under
relabelling and can be compared between graphs.
"""

from __future__ import annotations

from typing import Sequence

from .graphs import SimpleGraph, iter_bits


def refine(g: SimpleGraph, colors: Sequence[int] | None = None) -> list[int]:
    """Coarsest equitable refinement of ``colors`` (default: all equal).

    The result assigns each vertex a rank ``0..k-1``; ranks are ordered by an
    invariant signature, never by vertex id.
    """
    n = g.order
    cur = list(colors) if colors is not None else [0] * n
    # normalise to dense ranks first
    ranks = {c: r for r, c in enumerate(sorted(set(cur)))}
    cur = [ranks[c] for c in cur]
    k = len(ranks)
    while True:
        sigs = []
        for v in range(n):
            counts = [0] * k
            for u in iter_bits(g.adj[v]):
                counts[cur[u]] += 1
            sigs.append((cur[v], tuple(counts)))
        order = {s: r for r, s in enumerate(sorted(set(sigs)))}
        new = [order[s] for s in sigs]
        if len(order) == k:
            return new
        cur, k = new, len(order)


def _joint_refine(g: SimpleGraph, h: SimpleGraph) -> tuple[list[int], list[int]]:
    union = g.disjoint_union(h)
    colors = refine(union)
    return colors[: g.order], colors[g.order :]


def find_isomorphism(g: SimpleGraph, h: SimpleGraph) -> list[int] | None:
    """A bijection ``phi`` with ``uv in E(g) <=> phi[u]phi[v] in E(h)``, or ``None``."""
    if g.order != h.order or g.num_edges != h.num_edges:
        return None
    if sorted(g.degrees()) != sorted(h.degrees()):
        return None
    cg, ch = _joint_refine(g, h)
    if sorted(cg) != sorted(ch):
        return None

    n = g.order
    # map the most constrained vertices first
    class_size = {c: cg.count(c) for c in set(cg)}
    order = sorted(range(n), key=lambda v: (class_size[cg[v]], cg[v], v))
    candidates = {c: [w for w in range(n) if ch[w] == c] for c in class_size}
    phi = [-1] * n
    used = 0

    def extend(k: int) -> bool:
        nonlocal used
        if k == n:
            return True
        v = order[k]
        for w in candidates[cg[v]]:
            if used >> w & 1:
                continue
            ok = True
            for u in order[:k]:
                if g.has_edge(u, v) != h.has_edge(phi[u], w):
                    ok = False
                    break
            if not ok:
                continue
            phi[v] = w
            used |= 1 << w
            if extend(k + 1):
                return True
            used &= ~(1 << w)
            phi[v] = -1
        return False

    return list(phi) if extend(0) else None


def are_isomorphic(g: SimpleGraph, h: SimpleGraph) -> bool:
    return find_isomorphism(g, h) is not None


def canonical_form(g: SimpleGraph, colors: Sequence[int] | None = None) -> tuple:
    """Isomorphism-invariant key: equal iff the (coloured) graphs are isomorphic.

    Individualisation-refinement without automorphism pruning; every leaf of
    the search tree is a labelling, and the lexicographically least relabelled
    edge list wins.  Intended for graphs of order up to about ten.
    """
    n = g.order
    base = refine(g, colors)
    # refinement and individualisation both preserve the order of colour
    # classes, so position p of every leaf carries the p-th smallest colour
    color_key = tuple(sorted(colors)) if colors is not None else ()
    best: tuple | None = None

    def leaf_code(coloring: list[int]) -> tuple:
        edges = sorted(
            tuple(sorted((coloring[u], coloring[v]))) for u, v in g.edges()
        )
        return tuple(edges)

    def search(coloring: list[int]) -> None:
        nonlocal best
        k = max(coloring) + 1 if n else 0
        if k == n:
            code = leaf_code(coloring)
            if best is None or code < best:
                best = code
            return
        sizes = [0] * k
        for c in coloring:
            sizes[c] += 1
        # first smallest non-singleton cell
        target = min((s, c) for c, s in enumerate(sizes) if s > 1)[1]
        for v in range(n):
            if coloring[v] != target:
                continue
            split = [2 * c + (1 if c == target and u != v else 0) for u, c in enumerate(coloring)]
            search(refine(g, split))

    search(base)
    return (n, color_key, best)


def vertex_orbits(g: SimpleGraph) -> list[list[int]]:
    """Orbits of the automorphism group, each sorted, listed by least member."""
    keys: dict[tuple, list[int]] = {}
    for v in range(g.order):
        marks = [1 if u == v else 0 for u in range(g.order)]
        keys.setdefault(canonical_form(g, marks), []).append(v)
    return sorted(keys.values())
