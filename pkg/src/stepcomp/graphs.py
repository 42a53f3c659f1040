"""Value types: undirected graphs, digraphs and bipartite tournaments.

All three store adjacency as one Python ``int`` bitmask per vertex, so set
algebra on neighbourhoods is a single word operation.  Instances are frozen
and hashable.

Bipartite tournaments use a fixed vertex convention: the partite set ``V1``
is ``0..m-1`` and ``V2`` is ``m..m+n-1``.  The orientation is an ``m x n``
bit matrix read row-major; bit ``(i, j) = 1`` is the arc ``i -> m+j`` and
``0`` is the arc ``m+j -> i``.  The whole matrix is also kept as a single
integer ``code`` whose most significant bit is ``(0, 0)``, which makes the
enumeration order of orientations the plain integer order.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations
from typing import Iterable, Iterator, Sequence


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the indices of the set bits of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@lru_cache(maxsize=None)
def _reverse_table(width: int) -> tuple[int, ...]:
    return tuple(int(format(x, f"0{width}b")[::-1], 2) for x in range(1 << width))


def reverse_bits(x: int, width: int) -> int:
    """Reverse the low ``width`` bits of ``x``."""
    if width <= 12:
        return _reverse_table(width)[x]
    return int(format(x, f"0{width}b")[::-1], 2)


def mask_of(vertices: Iterable[int]) -> int:
    out = 0
    for v in vertices:
        out |= 1 << v
    return out


def _check_vertex(v: int, order: int) -> None:
    if not 0 <= v < order:
        raise ValueError(f"vertex {v} out of range for order {order}")


@dataclass(frozen=True)
class SimpleGraph:
    """Undirected simple graph on ``0..order-1``."""

    order: int
    adj: tuple[int, ...]

    def __post_init__(self):
        if len(self.adj) != self.order:
            raise ValueError("adjacency length does not match order")
        full = (1 << self.order) - 1
        for v, nb in enumerate(self.adj):
            if nb & ~full:
                raise ValueError(f"vertex {v} has a neighbour outside the vertex set")
            if nb >> v & 1:
                raise ValueError(f"self-loop at vertex {v}")
            for u in iter_bits(nb):
                if not self.adj[u] >> v & 1:
                    raise ValueError(f"adjacency not symmetric at {v}-{u}")

    @classmethod
    def _trusted(cls, order: int, adj: tuple[int, ...]) -> "SimpleGraph":
        # skips validation; for hot loops whose adjacency is symmetric by construction
        g = object.__new__(cls)
        object.__setattr__(g, "order", order)
        object.__setattr__(g, "adj", adj)
        return g

    @classmethod
    def from_edges(cls, order: int, edges: Iterable[tuple[int, int]]) -> "SimpleGraph":
        adj = [0] * order
        for u, v in edges:
            _check_vertex(u, order)
            _check_vertex(v, order)
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(order, tuple(adj))

    @classmethod
    def empty(cls, order: int) -> "SimpleGraph":
        return cls(order, (0,) * order)

    @classmethod
    def complete(cls, order: int) -> "SimpleGraph":
        full = (1 << order) - 1
        return cls(order, tuple(full & ~(1 << v) for v in range(order)))

    @classmethod
    def cycle(cls, order: int) -> "SimpleGraph":
        return cls.from_edges(order, ((v, (v + 1) % order) for v in range(order)))

    @classmethod
    def path(cls, order: int) -> "SimpleGraph":
        return cls.from_edges(order, ((v, v + 1) for v in range(order - 1)))

    @classmethod
    def star(cls, leaves: int, center: int = 0) -> "SimpleGraph":
        """``K_{1,leaves}`` with the hub at vertex ``center``."""
        order = leaves + 1
        return cls.from_edges(order, ((center, v) for v in range(order) if v != center))

    def neighbors(self, v: int) -> set[int]:
        _check_vertex(v, self.order)
        return set(iter_bits(self.adj[v]))

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> list[int]:
        return [nb.bit_count() for nb in self.adj]

    @property
    def num_edges(self) -> int:
        return sum(nb.bit_count() for nb in self.adj) // 2

    def edges(self) -> list[tuple[int, int]]:
        """Edges as ``(u, v)`` with ``u < v``, sorted."""
        return [(u, v) for u in range(self.order) for v in iter_bits(self.adj[u] >> (u + 1) << (u + 1))]

    def edge_set(self) -> frozenset[tuple[int, int]]:
        return frozenset(self.edges())

    def disjoint_union(self, other: "SimpleGraph") -> "SimpleGraph":
        """Vertices of ``other`` are shifted up by ``self.order``."""
        shift = self.order
        return SimpleGraph(self.order + other.order, self.adj + tuple(nb << shift for nb in other.adj))

    def relabel(self, perm: Sequence[int]) -> "SimpleGraph":
        """Graph with vertex ``v`` renamed to ``perm[v]``."""
        return SimpleGraph.from_edges(self.order, ((perm[u], perm[v]) for u, v in self.edges()))

    def induced(self, vertices: Sequence[int]) -> "SimpleGraph":
        index = {v: k for k, v in enumerate(vertices)}
        return SimpleGraph.from_edges(
            len(vertices),
            ((index[u], index[v]) for u, v in combinations(vertices, 2) if self.has_edge(u, v)),
        )


@dataclass(frozen=True)
class Digraph:
    """Loop-free digraph on ``0..order-1``; ``out_adj[v]`` is the out-neighbour mask."""

    order: int
    out_adj: tuple[int, ...]
    in_adj: tuple[int, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if len(self.out_adj) != self.order:
            raise ValueError("adjacency length does not match order")
        full = (1 << self.order) - 1
        ins = [0] * self.order
        for v, nb in enumerate(self.out_adj):
            if nb & ~full:
                raise ValueError(f"vertex {v} has an out-neighbour outside the vertex set")
            if nb >> v & 1:
                raise ValueError(f"self-loop at vertex {v}")
            for w in iter_bits(nb):
                ins[w] |= 1 << v
        object.__setattr__(self, "in_adj", tuple(ins))

    @classmethod
    def from_arcs(cls, order: int, arcs: Iterable[tuple[int, int]]) -> "Digraph":
        out = [0] * order
        for u, v in arcs:
            _check_vertex(u, order)
            _check_vertex(v, order)
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            out[u] |= 1 << v
        return cls(order, tuple(out))

    @classmethod
    def empty(cls, order: int) -> "Digraph":
        return cls(order, (0,) * order)

    def arcs(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.order) for v in iter_bits(self.out_adj[u])]

    @property
    def num_arcs(self) -> int:
        return sum(nb.bit_count() for nb in self.out_adj)

    def has_arc(self, u: int, v: int) -> bool:
        return bool(self.out_adj[u] >> v & 1)

    def underlying(self) -> SimpleGraph:
        return SimpleGraph.from_edges(self.order, self.arcs())


def out_neighbors(d: Digraph, v: int) -> set[int]:
    _check_vertex(v, d.order)
    return set(iter_bits(d.out_adj[v]))


def in_neighbors(d: Digraph, v: int) -> set[int]:
    _check_vertex(v, d.order)
    return set(iter_bits(d.in_adj[v]))


def outdegree(d: Digraph, v: int) -> int:
    _check_vertex(v, d.order)
    return d.out_adj[v].bit_count()


@dataclass(frozen=True)
class BipartiteTournament:
    """Orientation of ``K_{m,n}`` packed into the integer ``code``."""

    m: int
    n: int
    code: int

    def __post_init__(self):
        if self.m < 1 or self.n < 1:
            raise ValueError("both partite sets must be non-empty")
        if not 0 <= self.code < 1 << (self.m * self.n):
            raise ValueError("orientation code out of range")

    @property
    def order(self) -> int:
        return self.m + self.n

    def bit(self, i: int, j: int) -> int:
        return self.code >> (self.m * self.n - 1 - (i * self.n + j)) & 1

    def bits(self) -> list[int]:
        return [self.bit(i, j) for i in range(self.m) for j in range(self.n)]

    def bitstring(self) -> str:
        return format(self.code, f"0{self.m * self.n}b")

    def rows(self) -> list[int]:
        """Per V1 vertex, the mask of its out-neighbours in V2 (bit ``j`` = column ``j``)."""
        return orientation_masks(self.code, self.m, self.n)[0]

    def columns(self) -> list[int]:
        """Per V2 vertex, the mask of its out-neighbours in V1 (bit ``i`` = row ``i``)."""
        return orientation_masks(self.code, self.m, self.n)[1]

    def out_masks(self) -> tuple[int, ...]:
        """Out-neighbour masks over all ``m + n`` vertex ids."""
        m = self.m
        return tuple(r << m for r in self.rows()) + tuple(self.columns())

    def outdegrees(self) -> list[int]:
        return [nb.bit_count() for nb in self.out_masks()]

    def side(self, v: int) -> int:
        """1 for V1, 2 for V2."""
        _check_vertex(v, self.order)
        return 1 if v < self.m else 2

    def label(self, v: int) -> str:
        return f"x{v + 1}" if v < self.m else f"y{v - self.m + 1}"

    def swap_sides(self) -> "BipartiteTournament":
        """The same digraph with V1 and V2 exchanged (transpose and complement)."""
        bits = [1 - self.bit(i, j) for j in range(self.n) for i in range(self.m)]
        return bt_from_matrix(self.n, self.m, bits)


def bt_from_matrix(m: int, n: int, bits: Sequence[int] | str) -> BipartiteTournament:
    """Build a tournament from its row-major orientation bits.

    >>> bt_from_matrix(3, 2, [1, 0, 1, 1, 0, 1]).bitstring()
    '101101'
    """
    if m < 1 or n < 1:
        raise ValueError("both partite sets must be non-empty")
    if isinstance(bits, str):
        bits = [int(ch) for ch in bits]
    if len(bits) != m * n:
        raise ValueError(f"expected {m * n} orientation bits, got {len(bits)}")
    code = 0
    for b in bits:
        if b not in (0, 1):
            raise ValueError(f"orientation bit must be 0 or 1, got {b!r}")
        code = code << 1 | b
    return BipartiteTournament(m, n, code)


def orientation_masks(code: int, m: int, n: int) -> tuple[list[int], list[int]]:
    """Row and column out-masks of the orientation with integer ``code``.

    Same layout as :meth:`BipartiteTournament.rows` and
    :meth:`BipartiteTournament.columns`, without building the object.
    """
    width = (1 << n) - 1
    shift = m * n
    rows = []
    cols = [0] * n
    for i in range(m):
        shift -= n
        row = reverse_bits(code >> shift & width, n)
        rows.append(row)
        zeros = ~row & width
        while zeros:
            low = zeros & -zeros
            cols[low.bit_length() - 1] |= 1 << i
            zeros ^= low
    return rows, cols


def bt_to_digraph(t: BipartiteTournament) -> Digraph:
    return Digraph(t.order, t.out_masks())


def bt_from_digraph(d: Digraph, m: int) -> BipartiteTournament:
    """Inverse of :func:`bt_to_digraph` for a digraph orienting ``K_{m, order-m}``."""
    n = d.order - m
    bits = []
    for i in range(m):
        for j in range(n):
            fwd, back = d.has_arc(i, m + j), d.has_arc(m + j, i)
            if fwd == back:
                raise ValueError(f"pair ({i}, {m + j}) is not oriented exactly once")
            bits.append(1 if fwd else 0)
    if d.num_arcs != m * n:
        raise ValueError("digraph has arcs inside a partite set")
    return bt_from_matrix(m, n, bits)
