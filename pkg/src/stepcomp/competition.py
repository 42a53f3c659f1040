"""Competition-graph operators.

``step_competition_graph`` is the definitional ``(i, j)``-step operator over an
arbitrary digraph: ``uv`` is an edge iff some ``w != u, v`` lies within
distance ``i`` of one end in the digraph with the other end deleted, and within
distance ``j`` of the other end symmetrically.  ``c12_fast`` computes the
``(1, 2)`` case for bipartite tournaments without any search, using two facts:

* two vertices of the same partite set are adjacent iff they have a common
  out-neighbour;
* a vertex ``u`` of one side and ``v`` of the other are adjacent iff ``u`` has
  an out-neighbour other than ``v`` and ``v`` has one other than ``u``.

A length-2 walk ``v -> x -> w`` with ``w != v`` in a loop-free digraph is a
path, so bounded breadth-first search is enough for the walk-based wording.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .graphs import BipartiteTournament, Digraph, SimpleGraph, iter_bits


COMMON = "common-out-neighbor"
ONE_TWO = "one-two-step"


@dataclass(frozen=True)
class StepParams:
    i: int
    j: int

    def __post_init__(self):
        if self.i < 1 or self.j < 1:
            raise ValueError(f"step parameters must be positive, got ({self.i}, {self.j})")


@dataclass(frozen=True)
class EdgeWitness:
    """Why ``u`` and ``v`` are adjacent.

    For ``COMMON`` both ends have an arc to ``w``.  For ``ONE_TWO`` the end
    ``arc_from`` has the arc to ``w`` and the other end ``walk_from`` reaches
    ``w`` through ``via`` without touching ``arc_from``.
    """

    kind: str
    w: int
    arc_from: Optional[int] = None
    walk_from: Optional[int] = None
    via: Optional[int] = None

    def is_valid(self, d: Digraph, u: int, v: int) -> bool:
        """Re-check the witness against the raw arc relation."""
        if self.w in (u, v):
            return False
        if self.kind == COMMON:
            return d.has_arc(u, self.w) and d.has_arc(v, self.w)
        if self.kind == ONE_TWO:
            if {self.arc_from, self.walk_from} != {u, v} or self.via is None:
                return False
            return (
                self.via != self.arc_from
                and d.has_arc(self.arc_from, self.w)
                and d.has_arc(self.walk_from, self.via)
                and d.has_arc(self.via, self.w)
            )
        return False


def ball(d: Digraph, source: int, forbidden: int, limit: int) -> int:
    """Mask of vertices at distance ``<= limit`` from ``source`` in ``d - forbidden``."""
    drop = ~(1 << forbidden)
    seen = frontier = 1 << source
    for _ in range(limit):
        nxt = 0
        for x in iter_bits(frontier):
            nxt |= d.out_adj[x]
        nxt &= drop & ~seen
        if not nxt:
            break
        seen |= nxt
        frontier = nxt
    return seen


def bounded_distance(d: Digraph, forbidden: int, u: int, w: int, limit: int) -> bool:
    """Whether ``d - forbidden`` has a directed ``u``-``w`` path of length ``<= limit``."""
    for x in (forbidden, u, w):
        if not 0 <= x < d.order:
            raise ValueError(f"vertex {x} out of range for order {d.order}")
    if forbidden in (u, w):
        raise ValueError("endpoints must differ from the deleted vertex")
    return bool(ball(d, u, forbidden, limit) >> w & 1)


def competes(d: Digraph, u: int, v: int) -> Optional[EdgeWitness]:
    if u == v:
        raise ValueError("a vertex does not compete with itself")
    common = d.out_adj[u] & d.out_adj[v]
    if not common:
        return None
    return EdgeWitness(COMMON, (common & -common).bit_length() - 1)


def _one_two_from(d: Digraph, a: int, b: int) -> Optional[EdgeWitness]:
    # arc a -> w, walk b -> x -> w avoiding a, smallest w first
    targets = d.out_adj[a] & ~(1 << b)
    best = None
    for x in iter_bits(d.out_adj[b] & ~(1 << a)):
        hits = d.out_adj[x] & targets & ~(1 << b)
        if hits:
            w = (hits & -hits).bit_length() - 1
            if best is None or w < best[0]:
                best = (w, x)
    if best is None:
        return None
    return EdgeWitness(ONE_TWO, best[0], arc_from=a, walk_from=b, via=best[1])


def one_two_competes(d: Digraph, u: int, v: int) -> Optional[EdgeWitness]:
    """A ``(1,2)``-step common out-neighbour witness; the arc from ``u`` is tried first."""
    if u == v:
        raise ValueError("a vertex does not compete with itself")
    return _one_two_from(d, u, v) or _one_two_from(d, v, u)


def step_competition_graph(d: Digraph, p: StepParams | tuple[int, int]) -> SimpleGraph:
    if not isinstance(p, StepParams):
        p = StepParams(*p)
    n = d.order
    # balls[(s, f)] = vertices within reach of s once f is deleted, one BFS per (s, f)
    near_i: dict[tuple[int, int], int] = {}
    near_j: dict[tuple[int, int], int] = {}
    for s in range(n):
        for f in range(n):
            if s != f:
                near_i[s, f] = ball(d, s, f, p.i)
                near_j[s, f] = near_i[s, f] if p.j == p.i else ball(d, s, f, p.j)
    adj = [0] * n
    for u in range(n):
        for v in range(u + 1, n):
            keep = ~(1 << u | 1 << v)
            hit = (near_i[u, v] & near_j[v, u]) | (near_i[v, u] & near_j[u, v])
            if hit & keep:
                adj[u] |= 1 << v
                adj[v] |= 1 << u
    return SimpleGraph(n, tuple(adj))


def competition_graph(d: Digraph) -> SimpleGraph:
    n = d.order
    adj = [0] * n
    for u in range(n):
        for v in range(u + 1, n):
            if d.out_adj[u] & d.out_adj[v]:
                adj[u] |= 1 << v
                adj[v] |= 1 << u
    return SimpleGraph(n, tuple(adj))


def c12_adjacency(m: int, n: int, rows: list[int], cols: list[int]) -> tuple[int, ...]:
    """Adjacency masks of ``C_{1,2}`` from row and column out-masks.

    ``rows[i]`` holds the V2 out-neighbours of V1 vertex ``i`` (bit ``j``),
    ``cols[j]`` the V1 out-neighbours of V2 vertex ``j`` (bit ``i``).
    """
    adj = [0] * (m + n)
    for i in range(m):
        ri = rows[i]
        if not ri:
            continue
        same = 0
        for k in range(m):
            if k != i and ri & rows[k]:
                same |= 1 << k
        cross = 0
        for j in range(n):
            if ri & ~(1 << j) and cols[j] & ~(1 << i):
                cross |= 1 << j
        adj[i] = same | cross << m
    for j in range(n):
        cj = cols[j]
        if not cj:
            continue
        same = 0
        for l in range(n):
            if l != j and cj & cols[l]:
                same |= 1 << l
        cross = 0
        for i in range(m):
            if adj[i] >> (m + j) & 1:
                cross |= 1 << i
        adj[m + j] = same << m | cross
    return tuple(adj)


def c12_fast(t: BipartiteTournament) -> SimpleGraph:
    rows = t.rows()
    cols = t.columns()
    return SimpleGraph._trusted(t.order, c12_adjacency(t.m, t.n, rows, cols))


def explain_edge(t: BipartiteTournament, u: int, v: int) -> Optional[EdgeWitness]:
    """Witness for ``uv`` in ``C_{1,2}(t)``: common out-neighbour for same-side
    pairs, ``(1,2)``-step witness for cross pairs, ``None`` if not an edge."""
    if u == v:
        raise ValueError("a vertex is not adjacent to itself")
    d = Digraph(t.order, t.out_masks())
    if t.side(u) == t.side(v):
        return competes(d, u, v)
    return one_two_competes(d, u, v)
