"""Command-line driver.

Exit status: 0 success or verified, 1 violation found, 2 usage or parse error,
3 indeterminate (search budget exhausted).
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

from .competition import (
    StepParams,
    c12_fast,
    competes,
    competition_graph,
    explain_edge,
    step_competition_graph,
)
from .constructors import (
    UnsupportedParameters,
    complete_c12_witness,
    cover_to_orientation,
    disjoint_union_witness,
    fig2_witness,
    min_edge_witness,
    pair_k10_k5_witness,
    star_witness,
)
from .graphs import BipartiteTournament, Digraph, SimpleGraph, bt_from_matrix, bt_to_digraph
from .iso import are_isomorphic
from .realizability import Budget, CliqueCover, is_c12_realizable, is_competition_realizable_pair
from .structure import component_masks, diameter, has_edge_sharing_cycles, has_triangle, is_complete
from .textio import ParseError, edge_list, format_tournament, matrix, parse_any, parse_graph, to_dot
from .verify import SUITE_RUNNERS, EnumerationSpec, min_edges_formula, tree_census

EXIT_OK, EXIT_VIOLATION, EXIT_USAGE, EXIT_INDETERMINATE = 0, 1, 2, 3

BITS_HELP = (
    "orientation bits, row-major with V1 rows; bit (i,j) = 1 means x_i -> y_j. "
    "Example: the star witness on K_{3,2} has rows 10, 11, 01, given as --m 3 --n 2 --bits 101101"
)


class UsageError(Exception):
    pass


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path) as fh:
        return fh.read()


def _load(args) -> BipartiteTournament | Digraph | SimpleGraph:
    if args.bits is not None:
        if args.m is None or args.n is None:
            raise UsageError("--bits needs --m and --n")
        try:
            return bt_from_matrix(args.m, args.n, "".join(args.bits.split()))
        except ValueError as exc:
            raise UsageError(str(exc)) from None
    if args.input is None:
        raise UsageError("give an input file (or '-') or --m/--n/--bits")
    return parse_any(_read(args.input))


def _add_input(p: argparse.ArgumentParser) -> None:
    p.add_argument("input", nargs="?", help="tournament, digraph or graph file ('-' for stdin)")
    p.add_argument("--m", type=int, help="size of V1 (rows)")
    p.add_argument("--n", type=int, help="size of V2 (columns)")
    p.add_argument("--bits", help=BITS_HELP)


def _render_graph(g: SimpleGraph, fmt: str) -> str:
    if fmt == "dot":
        return to_dot(g)
    if fmt == "matrix":
        return matrix(g)
    return edge_list(g)


# ---------------------------------------------------------------------------
# compute

def cmd_compute(args) -> int:
    obj = _load(args)
    if isinstance(obj, SimpleGraph):
        raise UsageError("compute needs a tournament or digraph, not a graph")
    d = bt_to_digraph(obj) if isinstance(obj, BipartiteTournament) else obj
    if args.kind == "11":
        g = competition_graph(d)
    elif args.kind == "12":
        g = c12_fast(obj) if isinstance(obj, BipartiteTournament) else step_competition_graph(d, (1, 2))
    else:
        if args.i is None or args.j is None:
            raise UsageError("--kind ij needs --i and --j")
        try:
            params = StepParams(args.i, args.j)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
        g = step_competition_graph(d, params)
    out = [f"# {g.order} vertices, {g.num_edges} edges"]
    out.append(_render_graph(g, args.format).rstrip("\n"))
    if args.explain:
        for u, v in g.edges():
            if args.kind == "12" and isinstance(obj, BipartiteTournament):
                w = explain_edge(obj, u, v)
            elif args.kind == "11":
                w = competes(d, u, v)
            else:
                w = None
            out.append(f"# {u}-{v}: {_describe(w)}")
    print("\n".join(x for x in out if x))
    return EXIT_OK


def _describe(w) -> str:
    if w is None:
        return "no witness recorded for this kind"
    if w.arc_from is None:
        return f"common out-neighbour {w.w}"
    return f"{w.arc_from} -> {w.w}, {w.walk_from} -> {w.via} -> {w.w}"


# ---------------------------------------------------------------------------
# construct

def _self_check(family: str, t: BipartiteTournament, args, extra=None) -> tuple[bool, str]:
    g = c12_fast(t)
    if family == "star":
        return are_isomorphic(g, SimpleGraph.star(4)), "C12 ≅ K_{1,4}"
    if family == "fig2":
        comps = [c for c in component_masks(g) if c & (c - 1)]
        ok = g.num_edges == 13 and len(comps) == 1 and diameter(g, comps[0]) == 3
        ok = ok and has_triangle(g) and has_edge_sharing_cycles(g)
        return ok, "C12 has 13 edges and diameter 3"
    if family == "complete":
        return is_complete(g), f"C12 = K_{t.order}"
    if family == "disjoint-union":
        sizes = sorted(c.bit_count() for c in component_masks(g))
        ok = sizes == sorted([args.m, args.n]) and all(is_complete(g, c) for c in component_masks(g))
        return ok, f"C12 = K_{args.m} ∪ K_{args.n}"
    if family == "pair-k10-k5":
        c = competition_graph(bt_to_digraph(t))
        want = SimpleGraph.complete(args.m).disjoint_union(SimpleGraph.complete(5))
        return c.edge_set() == want.edge_set(), f"C = K_{args.m} ∪ K_5"
    if family == "min-edge":
        want = min_edges_formula(t.m, t.n)
        return g.num_edges == want, f"C12 has {g.num_edges} edges, formula {want}"
    if family == "from-cover":
        base = extra
        c = competition_graph(bt_to_digraph(t))
        want = base.disjoint_union(SimpleGraph.complete(t.n))
        return c.edge_set() == want.edge_set(), f"C = G ∪ K_{t.n}"
    raise AssertionError(family)


def _parse_cover(text: str, order: int) -> CliqueCover:
    cliques = []
    for part in text.split(";"):
        part = part.strip()
        if part:
            try:
                cliques.append([int(x) for x in part.split(",")])
            except ValueError:
                raise UsageError(f"bad clique {part!r}; write cliques as 0,1,2;2,3") from None
    return CliqueCover.of(order, cliques)


def cmd_construct(args) -> int:
    fam = args.family
    extra = None

    def need(*names):
        for name in names:
            if getattr(args, name) is None:
                raise UsageError(f"{fam} needs --{name}")

    try:
        if fam == "star":
            t = star_witness()
        elif fam == "fig2":
            t = fig2_witness()
        elif fam == "disjoint-union":
            need("m", "n")
            t = disjoint_union_witness(args.m, args.n)
        elif fam == "pair-k10-k5":
            need("m")
            t = pair_k10_k5_witness(args.m)
        elif fam == "complete":
            need("l")
            t = complete_c12_witness(args.l)
        elif fam == "min-edge":
            need("m", "n")
            t = min_edge_witness(args.m, args.n)
        else:
            need("graph", "m")
            extra = parse_graph(_read(args.graph))
            if args.cover:
                cover = _parse_cover(args.cover, extra.order)
            else:
                cover = is_competition_realizable_pair(extra, args.m)
                if cover is None:
                    print(f"refused: G has no edge clique cover by at most {args.m} cliques "
                          f"with every two cliques covering at most {extra.order - 1} vertices, "
                          f"so (G, K_{args.m}) is not a competition-realizable pair", file=sys.stderr)
                    return EXIT_VIOLATION
            t = cover_to_orientation(extra, cover, args.m)
    except UnsupportedParameters as exc:
        print(f"refused: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    ok, claim = _self_check(fam, t, args, extra)
    sys.stdout.write(format_tournament(t))
    print(f"# {claim}: {'ok' if ok else 'FAILED'}")
    return EXIT_OK if ok else EXIT_VIOLATION


# ---------------------------------------------------------------------------
# verify

def _spec(args) -> EnumerationSpec:
    if args.m is None or args.n is None:
        raise UsageError("this suite needs --m and --n")
    limit = max(args.m * args.n, 24) if args.force else 24
    try:
        return EnumerationSpec(
            args.m, args.n, dedup=args.dedup, shards=args.shards, jobs=args.jobs,
            limit=limit, check_every=args.check_every, seed=args.seed,
        )
    except ValueError as exc:
        raise UsageError(f"{exc}; pass --force to go beyond it" if "limit" in str(exc) else str(exc)) from None


def cmd_verify(args) -> int:
    suites = ["components", "diameter", "invariants", "extremal", "trees"] if args.suite == "all" else [args.suite]
    reports = []
    indeterminate = False
    for name in suites:
        if name == "trees":
            if args.max_order > 7:
                raise UsageError("--max-order is limited to 7")
            rep = tree_census(args.max_order)
            indeterminate |= rep.details.get("indeterminate", 0) > 0
        else:
            spec = _spec(args)
            if name == "extremal" and spec.m < spec.n:
                if args.suite == "all":
                    continue
                raise UsageError("extremal expects m >= n")
            rep = SUITE_RUNNERS[name](spec)
        reports.append(rep)
    if args.json:
        print(json.dumps([r.to_dict(timing=args.timing) for r in reports], indent=2, sort_keys=True))
    else:
        print("\n".join(r.render(timing=args.timing) for r in reports), end="")
    if all(r.verified for r in reports):
        return EXIT_OK
    return EXIT_INDETERMINATE if indeterminate else EXIT_VIOLATION


# ---------------------------------------------------------------------------
# realizable

def cmd_realizable(args) -> int:
    obj = _load(args)
    if not isinstance(obj, SimpleGraph):
        raise UsageError("realizable needs a graph ('graph N' header)")
    budget = Budget(max_orientations=args.max_orientations, max_nodes=args.max_nodes)
    ans = is_c12_realizable(obj, budget)
    print(f"status: {ans.status}")
    print(f"splits tried: {' '.join(f'{m}x{n}' for m, n in ans.splits)}")
    print(f"orientations tested: {ans.orientations_tested}")
    print(f"search nodes: {ans.nodes_visited}")
    if ans.certificate is not None:
        print("certificate:")
        sys.stdout.write(format_tournament(ans.certificate))
    return EXIT_INDETERMINATE if ans.indeterminate else EXIT_OK


# ---------------------------------------------------------------------------
# export

def cmd_export(args) -> int:
    obj = _load(args)
    if args.format == "dot":
        sys.stdout.write(to_dot(obj))
    elif args.format == "matrix":
        sys.stdout.write(matrix(obj))
    else:
        if isinstance(obj, SimpleGraph):
            sys.stdout.write(edge_list(obj))
        else:
            d = bt_to_digraph(obj) if isinstance(obj, BipartiteTournament) else obj
            sys.stdout.write("".join(f"{u} {v}\n" for u, v in d.arcs()))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="stepcomp",
        description="(i,j)-step competition graphs of bipartite tournaments.",
        epilog="Tournament files: a line 'm n' then the bit string. " + BITS_HELP,
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compute", help="competition graph of a tournament or digraph")
    _add_input(p)
    p.add_argument("--kind", choices=["11", "12", "ij"], default="12",
                   help="11: plain competition graph, 12: (1,2)-step, ij: general (needs --i --j)")
    p.add_argument("--i", type=int)
    p.add_argument("--j", type=int)
    p.add_argument("--explain", action="store_true", help="print a witness for every edge")
    p.add_argument("--format", choices=["edge-list", "dot", "matrix"], default="edge-list")
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("construct", help="build a witness tournament")
    p.add_argument("family", choices=["star", "disjoint-union", "pair-k10-k5", "complete", "min-edge", "fig2", "from-cover"])
    p.add_argument("--m", type=int)
    p.add_argument("--n", type=int)
    p.add_argument("--l", type=int, help="order of the complete graph")
    p.add_argument("--graph", help="graph file for from-cover")
    p.add_argument("--cover", help="cliques as '0,1,2;2,3'; searched for when omitted")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("verify", help="exhaustive checks over all orientations of K_{m,n}")
    p.add_argument("suite", choices=["components", "diameter", "invariants", "extremal", "trees", "all"])
    p.add_argument("--m", type=int)
    p.add_argument("--n", type=int)
    p.add_argument("--max-order", type=int, default=7)
    p.add_argument("--dedup", action="store_true", help="one orientation per relabelling class")
    p.add_argument("--shards", type=int, default=1)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--seed", type=int, default=0, help="selects the definitional cross-check subsample")
    p.add_argument("--check-every", type=int, default=997)
    p.add_argument("--force", action="store_true", help="allow m*n above 24")
    p.add_argument("--json", action="store_true")
    p.add_argument("--timing", action="store_true", help="include wall time in the report")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("realizable", help="is a graph C_{1,2} of some bipartite tournament?")
    _add_input(p)
    p.add_argument("--max-orientations", type=int, default=Budget.max_orientations)
    p.add_argument("--max-nodes", type=int, default=Budget.max_nodes)
    p.set_defaults(func=cmd_realizable)

    p = sub.add_parser("export", help="render a tournament, digraph or graph")
    _add_input(p)
    p.add_argument("--format", choices=["dot", "edge-list", "matrix"], default="dot")
    p.set_defaults(func=cmd_export)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (UsageError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
