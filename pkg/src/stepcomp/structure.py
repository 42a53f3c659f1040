"""Structural predicates on competition graphs.

Everything works on the adjacency bitmasks of :class:`SimpleGraph`; the
exhaustive harness calls these on every orientation, so the common cases are
kept to word operations.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional

from .graphs import SimpleGraph, iter_bits, mask_of

ALL_TRIVIAL = "all-trivial"
ONE_NONTRIVIAL = "one-nontrivial"
TWO_COMPLETE = "two-complete-min3"
VIOLATION = "violation"


@dataclass(frozen=True)
class ComponentShape:
    classification: str
    sizes: tuple[int, ...]
    nontrivial_diameter: Optional[int] = None


def component_masks(g: SimpleGraph) -> list[int]:
    """Connected components as vertex masks, ordered by least vertex."""
    left = (1 << g.order) - 1
    out = []
    while left:
        comp = frontier = left & -left
        while frontier:
            nxt = 0
            for v in iter_bits(frontier):
                nxt |= g.adj[v]
            frontier = nxt & ~comp
            comp |= frontier
        out.append(comp)
        left &= ~comp
    return out


def components(g: SimpleGraph) -> list[list[int]]:
    return [list(iter_bits(c)) for c in component_masks(g)]


def is_connected(g: SimpleGraph) -> bool:
    return g.order > 0 and len(component_masks(g)) == 1


def _eccentricity(g: SimpleGraph, v: int, comp: int) -> int:
    seen = frontier = 1 << v
    depth = 0
    while True:
        nxt = 0
        for x in iter_bits(frontier):
            nxt |= g.adj[x]
        nxt &= ~seen
        if not nxt:
            break
        seen |= nxt
        frontier = nxt
        depth += 1
    if seen != comp:
        raise ValueError("vertex set is not a connected component")
    return depth


def diameter(g: SimpleGraph, component: Iterable[int] | int | None = None) -> int:
    """Diameter of a connected vertex set (default: the whole graph)."""
    if component is None:
        comp = (1 << g.order) - 1
    elif isinstance(component, int):
        comp = component
    else:
        comp = mask_of(component)
    if not comp:
        raise ValueError("empty vertex set")
    # induced connectivity: distances must stay inside comp
    sub = SimpleGraph._trusted(g.order, tuple(nb & comp if comp >> v & 1 else 0 for v, nb in enumerate(g.adj)))
    return max(_eccentricity(sub, v, comp) for v in iter_bits(comp))


def is_complete(g: SimpleGraph, s: Iterable[int] | int | None = None) -> bool:
    if s is None:
        s = (1 << g.order) - 1
    elif not isinstance(s, int):
        s = mask_of(s)
    return all((g.adj[v] | 1 << v) & s == s for v in iter_bits(s))


def classify_shape(g: SimpleGraph) -> ComponentShape:
    comps = component_masks(g)
    sizes = tuple(sorted((c.bit_count() for c in comps), reverse=True))
    nontrivial = [c for c in comps if c & (c - 1)]
    if not nontrivial:
        return ComponentShape(ALL_TRIVIAL, sizes)
    if len(nontrivial) == 1:
        return ComponentShape(ONE_NONTRIVIAL, sizes, diameter(g, nontrivial[0]))
    if (
        len(nontrivial) == 2
        and len(comps) == 2
        and all(c.bit_count() >= 3 and is_complete(g, c) for c in nontrivial)
    ):
        return ComponentShape(TWO_COMPLETE, sizes, 1)
    return ComponentShape(VIOLATION, sizes)


def max_degree(g: SimpleGraph) -> int:
    return max((nb.bit_count() for nb in g.adj), default=0)


def is_tree(g: SimpleGraph) -> bool:
    return is_connected(g) and g.num_edges == g.order - 1


def is_unicyclic(g: SimpleGraph) -> bool:
    return is_connected(g) and g.num_edges == g.order


def triangle_count(g: SimpleGraph) -> int:
    total = 0
    for u in range(g.order):
        for v in iter_bits(g.adj[u] >> (u + 1) << (u + 1)):
            total += ((g.adj[u] & g.adj[v]) >> (v + 1)).bit_count()
    return total


def has_triangle(g: SimpleGraph) -> bool:
    return any(g.adj[u] & g.adj[v] for u, v in g.edges())


def has_edge_sharing_triangles(g: SimpleGraph) -> bool:
    """Some edge lies in two triangles, i.e. its ends have two common neighbours."""
    for u in range(g.order):
        for v in iter_bits(g.adj[u] >> (u + 1) << (u + 1)):
            common = g.adj[u] & g.adj[v]
            if common & (common - 1):
                return True
    return False


def blocks(g: SimpleGraph) -> list[tuple[int, int]]:
    """Biconnected blocks as ``(vertex mask, edge count)`` pairs (Hopcroft-Tarjan)."""
    n = g.order
    disc = [-1] * n
    low = [0] * n
    out: list[tuple[int, int]] = []
    timer = 0
    for root in range(n):
        if disc[root] != -1:
            continue
        disc[root] = low[root] = timer
        timer += 1
        edge_stack: list[tuple[int, int]] = []
        # iterative DFS: (vertex, parent, remaining neighbours)
        stack = [(root, -1, list(iter_bits(g.adj[root])))]
        while stack:
            v, parent, rest = stack[-1]
            if rest:
                w = rest.pop()
                if disc[w] == -1:
                    disc[w] = low[w] = timer
                    timer += 1
                    edge_stack.append((v, w))
                    stack.append((w, v, list(iter_bits(g.adj[w]))))
                elif w != parent and disc[w] < disc[v]:
                    edge_stack.append((v, w))
                    low[v] = min(low[v], disc[w])
                continue
            stack.pop()
            if parent == -1:
                continue
            low[parent] = min(low[parent], low[v])
            if low[v] >= disc[parent]:
                verts = 0
                count = 0
                while True:
                    a, b = edge_stack.pop()
                    verts |= 1 << a | 1 << b
                    count += 1
                    if (a, b) == (parent, v):
                        break
                out.append((verts, count))
    return out


def has_edge_sharing_cycles(g: SimpleGraph) -> bool:
    """Two distinct cycles share an edge.

    Every edge of a 2-connected block lies on a cycle; the block's cycles are
    pairwise edge-disjoint only when the block is a bridge or a single cycle,
    i.e. has no more edges than vertices.
    """
    return any(count > verts.bit_count() for verts, count in blocks(g))
