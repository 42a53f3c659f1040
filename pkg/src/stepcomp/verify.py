"""Exhaustive verification over all orientations of ``K_{m,n}``.

Orientations are visited in the integer order of their bit matrix.  A run is
split into contiguous shards of that range; each shard yields a partial result
and partials are merged in shard order, so a report does not depend on the
number of shards or on which worker finished first.
"""

from __future__ import annotations

import json
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import permutations
from math import comb, factorial
from typing import Callable, Optional

from .competition import c12_adjacency, one_two_competes, step_competition_graph
from .graphs import BipartiteTournament, Digraph, SimpleGraph, orientation_masks
from .iso import are_isomorphic
from .realizability import Budget, is_c12_realizable
from .structure import (
    VIOLATION,
    classify_shape,
    component_masks,
    diameter,
    has_edge_sharing_cycles,
    has_edge_sharing_triangles,
    has_triangle,
    is_complete,
    is_tree,
    is_unicyclic,
    max_degree,
    triangle_count,
)
from .trees import trees_by_leaf_addition, trees_by_pruefer

DEFAULT_LIMIT = 24
MAX_STORED_VIOLATIONS = 100
STAR = SimpleGraph.star(4)


@dataclass(frozen=True)
class EnumerationSpec:
    m: int
    n: int
    dedup: bool = False
    shards: int = 1
    jobs: int = 1
    limit: int = DEFAULT_LIMIT
    #: above m*n = 12 the definitional operator re-checks codes with code % check_every == seed % check_every
    check_every: int = 997
    seed: int = 0

    def __post_init__(self):
        if self.m < 1 or self.n < 1:
            raise ValueError("both partite sets must be non-empty")
        if self.m * self.n > self.limit:
            raise ValueError(f"m*n = {self.m * self.n} exceeds the exhaustive limit {self.limit}")
        if self.shards < 1 or self.jobs < 1 or self.check_every < 1:
            raise ValueError("shards, jobs and check_every must be positive")

    @property
    def total(self) -> int:
        return 1 << (self.m * self.n)


@dataclass
class VerificationReport:
    theorem: str
    spec: EnumerationSpec
    tested: int
    violations: list[tuple[str, str]]
    violation_count: int
    extremal: Optional[dict] = None
    details: dict = field(default_factory=dict)
    wall_time: float = 0.0

    @property
    def verified(self) -> bool:
        return self.violation_count == 0

    def to_dict(self, timing: bool = False) -> dict:
        out = {
            "theorem": self.theorem,
            "m": self.spec.m,
            "n": self.spec.n,
            "dedup": self.spec.dedup,
            "orientations": self.tested,
            "verified": self.verified,
            "violation_count": self.violation_count,
            "violations": [list(v) for v in self.violations],
            "extremal": self.extremal,
            "details": self.details,
        }
        if timing:
            out["wall_time"] = round(self.wall_time, 3)
        return out

    def render(self, timing: bool = False) -> str:
        """Line-oriented ``key: value`` text; identical for any shard count when ``timing`` is off."""
        lines = [
            f"theorem: {self.theorem}",
            f"partite sizes: {self.spec.m} {self.spec.n}",
            f"dedup: {'on' if self.spec.dedup else 'off'}",
            f"orientations: {self.tested}",
            f"violations: {self.violation_count}",
        ]
        for key, value in (self.extremal or {}).items():
            lines.append(f"{key}: {value}")
        for key, value in self.details.items():
            lines.append(f"{key}: {json.dumps(value, sort_keys=True) if isinstance(value, (dict, list)) else value}")
        for bits, reason in self.violations:
            lines.append(f"violation: {bits} {reason}")
        lines.append(f"verified: {'yes' if self.verified else 'no'}")
        if timing:
            lines.append(f"wall time: {self.wall_time:.3f}s")
        return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# symmetry reduction

def _chunks(code: int, m: int, n: int) -> list[int]:
    # row i as an n-bit int with column 0 as its high bit
    width = (1 << n) - 1
    return [code >> ((m - 1 - i) * n) & width for i in range(m)]


def _assemble(chunks, n: int) -> int:
    code = 0
    for c in chunks:
        code = code << n | c
    return code


def _transpose(chunks: list[int], m: int, n: int) -> list[int]:
    out = []
    for j in range(n):
        col = 0
        for c in chunks:
            col = col << 1 | (c >> (n - 1 - j) & 1)
        out.append(col)
    return out


_PERM_TABLES: dict[int, list[list[int]]] = {}


def _perm_tables(width: int) -> list[list[int]]:
    """For each permutation of ``width`` positions, the induced map on ``width``-bit words."""
    if width not in _PERM_TABLES:
        tables = []
        for perm in permutations(range(width)):
            table = []
            for word in range(1 << width):
                out = 0
                for k in range(width):
                    if word >> (width - 1 - perm[k]) & 1:
                        out |= 1 << (width - 1 - k)
                table.append(out)
            tables.append(table)
        _PERM_TABLES[width] = tables
    return _PERM_TABLES[width]


def _least_relabelling(chunks: list[int], m: int, n: int) -> int:
    """Least code over all row and column permutations of a fixed-side matrix."""
    if factorial(n) <= factorial(m):
        # permute columns, then the best row order is ascending
        return min(_assemble(sorted(t[c] for c in chunks), n) for t in _perm_tables(n))
    # permute rows, then the best column order is ascending column vectors
    cols = _transpose(chunks, m, n)
    best = None
    for t in _perm_tables(m):
        cand = _assemble(_transpose(sorted(t[c] for c in cols), n, m), n)
        if best is None or cand < best:
            best = cand
    return best


def _swap(chunks: list[int], m: int, n: int) -> list[int]:
    full = (1 << m) - 1
    return [c ^ full for c in _transpose(chunks, m, n)]


def canonical_code(code: int, m: int, n: int) -> int:
    """Least code in the orbit of ``code`` under partite-preserving relabellings
    (and the side swap when ``m == n``)."""
    chunks = _chunks(code, m, n)
    best = _least_relabelling(chunks, m, n)
    if m == n:
        best = min(best, _least_relabelling(_swap(chunks, m, n), n, m))
    return best


def _multiplicity_product(chunks: list[int]) -> int:
    out = 1
    for c in set(chunks):
        out *= factorial(chunks.count(c))
    return out


def orbit_size(code: int, m: int, n: int) -> int:
    """Orbit size by orbit-stabiliser, counting the stabiliser directly."""
    chunks = _chunks(code, m, n)
    target = sorted(chunks)
    fixed_rows = _multiplicity_product(chunks)

    def matching(source: list[int]) -> int:
        return sum(1 for t in _perm_tables(n) if sorted(t[c] for c in source) == target)

    stab = matching(chunks) * fixed_rows
    group = factorial(m) * factorial(n)
    if m == n:
        stab += matching(_swap(chunks, m, n)) * fixed_rows
        group *= 2
    return group // stab


# ---------------------------------------------------------------------------
# partial results

@dataclass
class _Partial:
    tested: int = 0
    violations: list[tuple[int, str]] = field(default_factory=list)
    violation_count: int = 0
    counters: dict = field(default_factory=dict)
    lows: dict = field(default_factory=dict)   # key -> (value, code)
    highs: dict = field(default_factory=dict)  # key -> (value, code)

    def fail(self, code: int, reason: str) -> None:
        self.violation_count += 1
        if len(self.violations) < MAX_STORED_VIOLATIONS:
            self.violations.append((code, reason))

    def count(self, key: str, by: int = 1) -> None:
        self.counters[key] = self.counters.get(key, 0) + by

    def low(self, key: str, value: int, code: int) -> None:
        if key not in self.lows or value < self.lows[key][0]:
            self.lows[key] = (value, code)

    def high(self, key: str, value: int, code: int) -> None:
        if key not in self.highs or value > self.highs[key][0]:
            self.highs[key] = (value, code)

    def merge(self, later: "_Partial") -> "_Partial":
        """Fold in the partial of the next shard; ties keep the earlier code."""
        self.tested += later.tested
        self.violation_count += later.violation_count
        room = MAX_STORED_VIOLATIONS - len(self.violations)
        self.violations.extend(later.violations[:room])
        for k, v in later.counters.items():
            self.counters[k] = self.counters.get(k, 0) + v
        for k, (v, c) in later.lows.items():
            self.low(k, v, c)
        for k, (v, c) in later.highs.items():
            self.high(k, v, c)
        return self


# ---------------------------------------------------------------------------
# per-orientation checks

def _check_components(part: _Partial, code, m, n, rows, cols, adj, spec) -> None:
    shape = classify_shape(SimpleGraph._trusted(m + n, adj))
    part.count(shape.classification)
    if shape.classification == VIOLATION:
        part.fail(code, f"component sizes {list(shape.sizes)}")


def _check_diameter(part: _Partial, code, m, n, rows, cols, adj, spec) -> None:
    g = SimpleGraph._trusted(m + n, adj)
    for comp in component_masks(g):
        if comp & (comp - 1):
            d = diameter(g, comp)
            part.high("max diameter", d, code)
            if d > 3:
                part.fail(code, f"nontrivial component of diameter {d}")


def _outdeg(rows, cols, m):
    return [r.bit_count() for r in rows] + [c.bit_count() for c in cols]


def _check_invariants(part: _Partial, code, m, n, rows, cols, adj, spec) -> None:
    order = m + n
    g = SimpleGraph._trusted(order, adj)
    out = tuple(r << m for r in rows) + tuple(cols)
    d = Digraph(order, out)
    outdeg = [x.bit_count() for x in out]
    v1 = (1 << m) - 1
    v2 = ((1 << order) - 1) ^ v1

    for v in range(order):
        if adj[v] and not outdeg[v]:
            part.fail(code, f"non-isolated vertex {v} has no out-neighbour")

    for u in range(order):
        for v in range(u + 1, order):
            same = (u < m) == (v < m)
            edge = bool(adj[u] >> v & 1)
            compete = bool(out[u] & out[v])
            if same and edge != compete:
                part.fail(code, f"same-side pair {u},{v}: edge={edge} but compete={compete}")
            if not same and edge:
                if compete:
                    part.fail(code, f"cross edge {u},{v} has a common out-neighbour")
                if one_two_competes(d, u, v) is None:
                    part.fail(code, f"cross edge {u},{v} without a (1,2)-step witness")
                a, b = (u, v) if u < m else (v, u)
                if not (adj[a] & v1 or adj[b] & v2):
                    part.fail(code, f"cross edge {a},{b} with no same-side neighbour at either end")

    for u, v in d.arcs():
        if outdeg[v] >= 1 and bool(adj[u] >> v & 1) != (outdeg[u] >= 2):
            part.fail(code, f"arc {u}->{v}: edge does not match outdegree of {u}")

    cross_complete = all(adj[i] & v2 == v2 for i in range(m))
    if (min(outdeg) >= 2) != cross_complete:
        part.fail(code, "all-outdegrees-at-least-two does not match complete cross edges")

    comps = component_masks(g)
    nontrivial = [c for c in comps if c & (c - 1)]
    isolated = len(comps) - len(nontrivial)
    if any(is_complete(g, c) for c in nontrivial):
        whole = len(comps) == 1 and order >= 12
        one_plus_isolated = len(nontrivial) == 1 and isolated >= 1
        two_big = len(comps) == 2 and len(nontrivial) == 2 and all(
            c.bit_count() >= 3 and is_complete(g, c) for c in nontrivial
        )
        if not (whole or one_plus_isolated or two_big):
            part.fail(code, f"complete component outside the three permitted shapes {sorted(c.bit_count() for c in comps)}")

    if len(comps) == 1:
        part.count("connected")
        if max_degree(g) < 3:
            part.fail(code, "connected with maximum degree below three")
        if is_unicyclic(g):
            part.fail(code, "connected unicyclic")
        if is_tree(g) and not are_isomorphic(g, STAR):
            part.fail(code, "tree other than K_{1,4}")
        if not is_complete(g) and not has_edge_sharing_triangles(g) and not are_isomorphic(g, STAR):
            part.fail(code, "connected non-complete, no edge-sharing triangles, not K_{1,4}")
        if diameter(g) == 3:
            part.count("diameter three")
            part.count("diameter three triangles", triangle_count(g))
            if has_edge_sharing_triangles(g):
                part.count("diameter three with edge-sharing triangles")
            if not (has_triangle(g) and has_edge_sharing_cycles(g)):
                part.fail(code, "diameter three without a triangle and edge-sharing cycles")

    if m * n <= 12 or code % spec.check_every == spec.seed % spec.check_every:
        part.count("definitional cross-checks")
        if step_competition_graph(d, (1, 2)).adj != adj:
            part.fail(code, "fast path disagrees with the definitional operator")


def _check_extremal(part: _Partial, code, m, n, rows, cols, adj, spec) -> None:
    edges = sum(x.bit_count() for x in adj) // 2
    part.low("edges", edges, code)
    part.high("edges", edges, code)


_SUITES: dict[str, tuple[str, Callable]] = {
    "components": ("at most one nontrivial component, or two complete components of size >= 3", _check_components),
    "diameter": ("nontrivial components have diameter at most three", _check_diameter),
    "invariants": ("structural invariants of C_{1,2} for bipartite tournaments", _check_invariants),
    "extremal": ("minimum edge count of C_{1,2}", _check_extremal),
}


def _scan(suite: str, spec: EnumerationSpec, lo: int, hi: int) -> _Partial:
    check = _SUITES[suite][1]
    m, n = spec.m, spec.n
    part = _Partial()
    for code in range(lo, hi):
        if spec.dedup and canonical_code(code, m, n) != code:
            continue
        rows, cols = orientation_masks(code, m, n)
        adj = c12_adjacency(m, n, rows, cols)
        part.tested += 1
        check(part, code, m, n, rows, cols, adj, spec)
    return part


def _shard_bounds(spec: EnumerationSpec) -> list[tuple[int, int]]:
    total = spec.total
    k = min(spec.shards, total)
    return [(total * s // k, total * (s + 1) // k) for s in range(k)]


def _run(suite: str, spec: EnumerationSpec) -> tuple[_Partial, float]:
    start = time.perf_counter()
    bounds = _shard_bounds(spec)
    if spec.jobs > 1 and len(bounds) > 1:
        with ProcessPoolExecutor(max_workers=spec.jobs) as pool:
            parts = list(pool.map(_scan, [suite] * len(bounds), [spec] * len(bounds),
                                  [lo for lo, _ in bounds], [hi for _, hi in bounds]))
    else:
        parts = [_scan(suite, spec, lo, hi) for lo, hi in bounds]
    merged = _Partial()
    for p in parts:
        merged.merge(p)
    return merged, time.perf_counter() - start


def _report(suite: str, spec: EnumerationSpec, part: _Partial, wall: float, extremal=None) -> VerificationReport:
    m, n = spec.m, spec.n
    width = m * n
    return VerificationReport(
        theorem=_SUITES[suite][0],
        spec=spec,
        tested=part.tested,
        violations=[(format(c, f"0{width}b"), r) for c, r in part.violations],
        violation_count=part.violation_count,
        extremal=extremal,
        details=dict(sorted(part.counters.items())),
        wall_time=wall,
    )


def enumerate_orientations(spec: EnumerationSpec, visitor: Callable[[BipartiteTournament], None]) -> int:
    """Call ``visitor`` on every orientation (one per class when ``spec.dedup``), in code order."""
    count = 0
    for lo, hi in _shard_bounds(spec):
        for code in range(lo, hi):
            if spec.dedup and canonical_code(code, spec.m, spec.n) != code:
                continue
            visitor(BipartiteTournament(spec.m, spec.n, code))
            count += 1
    return count


def verify_component_theorem(spec: EnumerationSpec) -> VerificationReport:
    part, wall = _run("components", spec)
    return _report("components", spec, part, wall)


def verify_diameter_theorem(spec: EnumerationSpec) -> VerificationReport:
    part, wall = _run("diameter", spec)
    value, code = part.highs.get("max diameter", (0, None))
    extremal = {"max diameter": value}
    if code is not None:
        extremal["max diameter witness"] = format(code, f"0{spec.m * spec.n}b")
    return _report("diameter", spec, part, wall, extremal)


def verify_invariant_suite(spec: EnumerationSpec) -> VerificationReport:
    part, wall = _run("invariants", spec)
    return _report("invariants", spec, part, wall)


def min_edges_formula(m: int, n: int) -> int:
    """Fewest edges of ``C_{1,2}`` over orientations of ``K_{m,n}``."""
    small = min(m, n)
    return 0 if (m, n) == (2, 2) else comb(small, 2)


def extremal_edge_counts(spec: EnumerationSpec) -> VerificationReport:
    if spec.m < spec.n:
        raise ValueError(f"extremal counts expect m >= n, got m={spec.m}, n={spec.n}")
    part, wall = _run("extremal", spec)
    width = spec.m * spec.n
    lo, lo_code = part.lows["edges"]
    hi, hi_code = part.highs["edges"]
    expected = min_edges_formula(spec.m, spec.n)
    if lo != expected:
        part.fail(lo_code, f"minimum {lo} differs from formula {expected}")
    extremal = {
        "min edges": lo,
        "min formula": expected,
        "min witness": format(lo_code, f"0{width}b"),
        "max edges": hi,
        "max witness": format(hi_code, f"0{width}b"),
    }
    return _report("extremal", spec, part, wall, extremal)


def tree_census(max_order: int, budget: Budget = Budget()) -> VerificationReport:
    """Decide realizability of every tree of order ``2..max_order``; only ``K_{1,4}`` may pass."""
    if max_order > 7:
        raise ValueError("tree census is limited to order 7")
    start = time.perf_counter()
    part = _Partial()
    realizable: list[str] = []
    per_order = {}
    for p in range(2, max_order + 1):
        trees = trees_by_leaf_addition(p)
        if len(trees) != len(trees_by_pruefer(p)):
            part.fail(p, f"tree generators disagree at order {p}")
        per_order[p] = len(trees)
        for t in trees:
            part.tested += 1
            ans = is_c12_realizable(t, budget)
            part.count("indeterminate" if ans.indeterminate else "decided")
            name = f"order {p} edges {t.edges()}"
            if ans.indeterminate:
                part.fail(p, f"indeterminate: {name}")
            elif ans.realizable:
                realizable.append("K_{1,4}" if are_isomorphic(t, STAR) else name)
                if not are_isomorphic(t, STAR):
                    part.fail(p, f"realizable tree other than K_{{1,4}}: {name}")
    if realizable.count("K_{1,4}") != (1 if max_order >= 5 else 0):
        part.fail(max_order, "K_{1,4} was not found realizable")
    spec = EnumerationSpec(max_order, 1, limit=max(DEFAULT_LIMIT, max_order))
    report = VerificationReport(
        theorem="a tree is (1,2)-step competition-realizable iff it is K_{1,4}",
        spec=spec,
        tested=part.tested,
        violations=[(str(c), r) for c, r in part.violations],
        violation_count=part.violation_count,
        extremal={"realizable trees": ", ".join(realizable) or "none"},
        details={"trees per order": per_order, **dict(sorted(part.counters.items()))},
        wall_time=time.perf_counter() - start,
    )
    return report


SUITE_RUNNERS = {
    "components": verify_component_theorem,
    "diameter": verify_diameter_theorem,
    "invariants": verify_invariant_suite,
    "extremal": extremal_edge_counts,
}
