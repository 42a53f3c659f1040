"""Realizability decisions.

Two questions are answered here.  Whether ``(G, K_m)`` is a
competition-realizable pair is decided through edge clique covers: it holds iff
``G`` has a cover by at most ``m`` cliques in which any two cliques together
miss at least one vertex of ``G``.  Whether a graph is the ``(1,2)``-step
competition graph of some bipartite tournament is decided by direct search
over splits, side assignments and orientations.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Optional, Sequence

from .competition import c12_adjacency
from .graphs import BipartiteTournament, SimpleGraph, bt_from_matrix, iter_bits, orientation_masks
from .iso import are_isomorphic, canonical_form


@dataclass(frozen=True)
class CliqueCover:
    base_order: int
    cliques: tuple[frozenset[int], ...]

    @classmethod
    def of(cls, base_order: int, cliques) -> "CliqueCover":
        return cls(base_order, tuple(frozenset(c) for c in cliques))

    def __len__(self) -> int:
        return len(self.cliques)

    def max_union(self) -> int:
        """Largest ``|S ∪ S'|`` over ordered pairs, a clique paired with itself included."""
        return max((len(a | b) for a in self.cliques for b in self.cliques), default=0)

    def problems(self, g: SimpleGraph) -> list[str]:
        """Reasons this is not an edge clique cover of ``g``; empty when it is."""
        out = []
        if g.order != self.base_order:
            out.append(f"cover is over {self.base_order} vertices, graph has {g.order}")
            return out
        covered = set()
        for k, c in enumerate(self.cliques):
            if any(not 0 <= v < g.order for v in c):
                out.append(f"clique {k} has a vertex outside the graph")
                continue
            for u, v in combinations(sorted(c), 2):
                if not g.has_edge(u, v):
                    out.append(f"clique {k} is not a clique: {u} and {v} are not adjacent")
                covered.add((u, v))
        for e in g.edges():
            if e not in covered:
                out.append(f"edge {e[0]}-{e[1]} is not covered")
        return out


def _require_no_isolated(g: SimpleGraph) -> None:
    lonely = [v for v in range(g.order) if not g.adj[v]]
    if lonely:
        raise ValueError(f"graph has isolated vertices {lonely}")


def _cliques(g: SimpleGraph, max_size: int) -> list[int]:
    """All cliques with 2..max_size vertices, as masks."""
    out = []

    def grow(clique: int, size: int, cand: int) -> None:
        if size >= 2:
            out.append(clique)
        if size == max_size:
            return
        while cand:
            low = cand & -cand
            v = low.bit_length() - 1
            cand ^= low
            grow(clique | low, size + 1, cand & g.adj[v])

    for v in range(g.order):
        grow(1 << v, 1, g.adj[v] >> (v + 1) << (v + 1))
    return out


@dataclass
class CoverSearchStats:
    nodes: int = 0


def find_clique_cover(
    g: SimpleGraph,
    max_cliques: int,
    union_bound: int,
    stats: Optional[CoverSearchStats] = None,
) -> Optional[CliqueCover]:
    """Edge clique cover with at most ``max_cliques`` cliques and ``|S ∪ S'| <= union_bound``
    for every two cliques (a clique with itself included), or ``None``.

    Exact backtracking: always cover the first uncovered edge, trying the
    cliques through it largest first; prune on pairwise unions and on how many
    edges the remaining slots can still cover.
    """
    _require_no_isolated(g)
    stats = stats if stats is not None else CoverSearchStats()
    edges = g.edges()
    if not edges:
        return CliqueCover(g.order, ())
    index = {e: k for k, e in enumerate(edges)}
    pool = _cliques(g, union_bound)

    def edge_mask(c: int) -> int:
        vs = list(iter_bits(c))
        out = 0
        for u, v in combinations(vs, 2):
            out |= 1 << index[u, v]
        return out

    info = [(c, edge_mask(c), c.bit_count()) for c in pool]
    by_edge: list[list[tuple[int, int, int]]] = [[] for _ in edges]
    for item in info:
        for k in iter_bits(item[1]):
            by_edge[k].append(item)
    for lst in by_edge:
        lst.sort(key=lambda it: (-it[2], it[0]))
    all_edges = (1 << len(edges)) - 1
    chosen: list[int] = []

    def compatible(c: int) -> bool:
        return all((c | x).bit_count() <= union_bound for x in chosen)

    closed = [nb | 1 << v for v, nb in enumerate(g.adj)]

    def twin_classes(edge: tuple[int, int]) -> list[list[int]]:
        # swapping two such vertices fixes g, the chosen cliques and the branching edge
        groups: dict[tuple, list[int]] = {}
        for v in range(g.order):
            member = tuple(c >> v & 1 for c in chosen)
            pinned = v if v in edge else -1
            groups.setdefault((closed[v], member, pinned), []).append(v)
        return [vs for vs in groups.values() if len(vs) > 1]

    def uses_prefixes(c: int, classes: list[list[int]]) -> bool:
        # up to the twin symmetries, a clique meets each class in its first vertices
        for vs in classes:
            k = sum(c >> v & 1 for v in vs)
            if any(not c >> v & 1 for v in vs[:k]):
                return False
        return True

    def search(uncovered: int, slots: int) -> bool:
        stats.nodes += 1
        if not uncovered:
            return True
        if slots == 0:
            return False
        first = (uncovered & -uncovered).bit_length() - 1
        live = [it for it in info if compatible(it[0])]
        # compatibility only shrinks: every uncovered edge needs a live clique,
        # and no later clique covers more than the best live one does now
        reach = 0
        best_gain = 0
        for it in live:
            reach |= it[1]
            best_gain = max(best_gain, (it[1] & uncovered).bit_count())
        if uncovered & ~reach or best_gain * slots < uncovered.bit_count():
            return False
        options = [it for it in by_edge[first] if compatible(it[0])]
        classes = twin_classes(edges[first])
        options = [it for it in options if uses_prefixes(it[0], classes)]
        options.sort(key=lambda it: -(it[1] & uncovered).bit_count())
        for c, em, _ in options:
            chosen.append(c)
            if search(uncovered & ~em, slots - 1):
                return True
            chosen.pop()
        return False

    if search(all_edges, max_cliques):
        return CliqueCover(g.order, tuple(frozenset(iter_bits(c)) for c in chosen))
    return None


def is_competition_realizable_pair(g: SimpleGraph, m: int) -> Optional[CliqueCover]:
    """Certificate that ``g ∪ K_m`` is the competition graph of an orientation of
    ``K_{|V(g)|, m}`` with sides ``V(g)`` and ``V(K_m)``, or ``None``.

    The union bound is applied to every clique including a clique paired with
    itself.  For ``m = 1`` this rejects a complete ``g`` even though sending every
    vertex of ``g`` to the single sink realizes ``g ∪ K_1``.
    """
    if m < 1:
        raise ValueError("m must be positive")
    return find_clique_cover(g, m, g.order - 1)


# ---------------------------------------------------------------------------
# (1,2)-step realizability by search

@dataclass(frozen=True)
class Budget:
    """Search limits; ``enumerate_up_to`` picks full enumeration for ``m*n`` at most this."""

    max_orientations: int = 5_000_000
    max_nodes: int = 5_000_000
    enumerate_up_to: int = 16
    use_symmetry: bool = True


@dataclass
class RealizabilityAnswer:
    realizable: Optional[bool]
    certificate: Optional[BipartiteTournament] = None
    nodes_visited: int = 0
    orientations_tested: int = 0
    splits: list[tuple[int, int]] = field(default_factory=list)

    @property
    def indeterminate(self) -> bool:
        return self.realizable is None

    @property
    def status(self) -> str:
        if self.realizable is None:
            return "indeterminate"
        return "realizable" if self.realizable else "not realizable"


class _BudgetExhausted(Exception):
    pass


def _signature(adj: Sequence[int]) -> tuple[int, tuple[int, ...]]:
    degs = sorted(nb.bit_count() for nb in adj)
    return sum(degs), tuple(degs)


def _enumerate_split(h: SimpleGraph, m: int, n: int, ans: RealizabilityAnswer, budget: Budget):
    target = _signature(h.adj)
    for code in range(1 << (m * n)):
        if ans.orientations_tested >= budget.max_orientations:
            raise _BudgetExhausted
        ans.orientations_tested += 1
        rows, cols = orientation_masks(code, m, n)
        adj = c12_adjacency(m, n, rows, cols)
        if _signature(adj) != target:
            continue
        if are_isomorphic(SimpleGraph._trusted(m + n, adj), h):
            return BipartiteTournament(m, n, code)
    return None


def _side_assignments(h: SimpleGraph, m: int, use_symmetry: bool):
    """V1 candidates (sorted tuples), one per orbit of automorphisms when ``use_symmetry``."""
    p = h.order
    n = p - m
    seen = set()
    for v1 in combinations(range(p), m):
        if use_symmetry:
            marks = [0 if v in v1 else 1 for v in range(p)]
            key = canonical_form(h, marks)
            if m == n:
                key = min(key, canonical_form(h, [1 - c for c in marks]))
            if key in seen:
                continue
            seen.add(key)
        yield v1


def _backtrack_split(h: SimpleGraph, m: int, n: int, ans: RealizabilityAnswer, budget: Budget):
    p = m + n
    full_n = (1 << n) - 1
    for v1 in _side_assignments(h, m, budget.use_symmetry):
        v2 = [v for v in range(p) if v not in v1]
        perm = list(v1) + v2  # tournament id -> vertex of h
        target = h.induced(perm)  # h relabelled so V1 = 0..m-1
        tadj = target.adj
        v2_nonedges = [
            (1 << a) | (1 << b)
            for a, b in combinations(range(n), 2)
            if not tadj[m + a] >> (m + b) & 1
        ]
        rows: list[int] = []

        def row_ok(i: int, r: int) -> bool:
            deg_i = tadj[i]
            if not r:
                return deg_i == 0
            for k in range(i):
                if bool(r & rows[k]) != bool(deg_i >> k & 1):
                    return False
            cross = deg_i >> m
            # a cross edge i-j needs an out-neighbour of i other than j
            if r & (r - 1) == 0 and cross & r:
                return False
            zeros = ~r & full_n
            return not any(pair & zeros == pair for pair in v2_nonedges)

        def extend(i: int):
            ans.nodes_visited += 1
            if ans.nodes_visited > budget.max_nodes:
                raise _BudgetExhausted
            if i == m:
                ans.orientations_tested += 1
                cols = [0] * n
                for k, r in enumerate(rows):
                    for j in iter_bits(~r & full_n):
                        cols[j] |= 1 << k
                if c12_adjacency(m, n, rows, cols) == tadj:
                    return True
                return False
            for r in range(1 << n):
                if row_ok(i, r):
                    rows.append(r)
                    if extend(i + 1):
                        return True
                    rows.pop()
            return False

        if extend(0):
            bits = [rows[i] >> j & 1 for i in range(m) for j in range(n)]
            return bt_from_matrix(m, n, bits)
    return None


def is_c12_realizable(h: SimpleGraph, budget: Budget = Budget()) -> RealizabilityAnswer:
    """Search for a bipartite tournament whose ``C_{1,2}`` is isomorphic to ``h``.

    Splits ``m + n = |V(h)|`` with ``m >= n`` are tried in order of decreasing
    ``n``.  Exhausting the budget yields an indeterminate answer, never a
    negative one.
    """
    p = h.order
    if p < 2:
        raise ValueError("need at least two vertices")
    ans = RealizabilityAnswer(False)
    try:
        for n in range(p // 2, 0, -1):
            m = p - n
            ans.splits.append((m, n))
            if m * n <= budget.enumerate_up_to:
                cert = _enumerate_split(h, m, n, ans, budget)
            else:
                cert = _backtrack_split(h, m, n, ans, budget)
            if cert is not None:
                ans.realizable = True
                ans.certificate = cert
                return ans
    except _BudgetExhausted:
        ans.realizable = None
    return ans
