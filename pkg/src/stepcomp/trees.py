"""Free trees up to isomorphism, by two independent routes.

``trees_by_leaf_addition`` grows every tree of order ``p`` from those of order
``p - 1`` and deduplicates with the general canonical form.
``trees_by_pruefer`` decodes every Prüfer sequence and deduplicates with the
rooted-at-centre AHU string.  The two share no code beyond :class:`SimpleGraph`,
so agreeing counts are a real check on both.
"""

from __future__ import annotations

from itertools import product

from .graphs import SimpleGraph, iter_bits
from .iso import canonical_form


def trees_by_leaf_addition(p: int) -> list[SimpleGraph]:
    if p < 1:
        raise ValueError("order must be positive")
    level = {canonical_form(SimpleGraph.empty(1)): SimpleGraph.empty(1)}
    for order in range(1, p):
        nxt: dict[tuple, SimpleGraph] = {}
        for t in level.values():
            for v in range(order):
                edges = t.edges() + [(v, order)]
                grown = SimpleGraph.from_edges(order + 1, edges)
                nxt.setdefault(canonical_form(grown), grown)
        level = nxt
    return list(level.values())


def _pruefer_decode(seq: tuple[int, ...]) -> SimpleGraph:
    p = len(seq) + 2
    degree = [1] * p
    for x in seq:
        degree[x] += 1
    edges = []
    for x in seq:
        leaf = min(v for v in range(p) if degree[v] == 1)
        edges.append((leaf, x))
        degree[leaf] -= 1
        degree[x] -= 1
    u, v = [w for w in range(p) if degree[w] == 1]
    edges.append((u, v))
    return SimpleGraph.from_edges(p, edges)


def _centers(t: SimpleGraph) -> list[int]:
    alive = (1 << t.order) - 1
    deg = t.degrees()
    while alive.bit_count() > 2:
        leaves = [v for v in iter_bits(alive) if deg[v] <= 1]
        for v in leaves:
            alive &= ~(1 << v)
            for u in iter_bits(t.adj[v] & alive):
                deg[u] -= 1
    return list(iter_bits(alive))


def _ahu(t: SimpleGraph, v: int, parent: int) -> str:
    kids = sorted(_ahu(t, u, v) for u in iter_bits(t.adj[v]) if u != parent)
    return "(" + "".join(kids) + ")"


def tree_code(t: SimpleGraph) -> str:
    """Canonical string of a free tree: the least AHU code over its centres."""
    return min(_ahu(t, c, -1) for c in _centers(t))


def trees_by_pruefer(p: int) -> list[SimpleGraph]:
    if p < 1:
        raise ValueError("order must be positive")
    if p == 1:
        return [SimpleGraph.empty(1)]
    if p == 2:
        return [SimpleGraph.complete(2)]
    found: dict[str, SimpleGraph] = {}
    for seq in product(range(p), repeat=p - 2):
        t = _pruefer_decode(seq)
        found.setdefault(tree_code(t), t)
    return list(found.values())
