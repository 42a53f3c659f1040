"""Plain-text formats.

Tournament::

    m n
    101101

The bit string is row-major with V1 rows; whitespace inside it is ignored, so
``10 11 01`` is the same orientation.  Digraphs and graphs are a header line
``digraph N`` or ``graph N`` followed by one ``u v`` pair per line.  Lines
starting with ``#`` are comments everywhere.
"""

from __future__ import annotations

from typing import Union

from .graphs import BipartiteTournament, Digraph, SimpleGraph, bt_from_matrix, bt_to_digraph

Parsed = Union[BipartiteTournament, Digraph, SimpleGraph]


class ParseError(ValueError):
    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


def _lines(text: str) -> list[tuple[int, str]]:
    out = []
    for k, raw in enumerate(text.splitlines(), start=1):
        body = raw.split("#", 1)[0]
        if body.strip():
            out.append((k, body))
    return out


def _ints(lineno: int, body: str, count: int) -> list[int]:
    out = []
    col = 0
    for tok in body.split():
        col = body.index(tok, col)
        if not tok.isdigit():
            raise ParseError(f"expected a non-negative integer, got {tok!r}", lineno, col + 1)
        out.append(int(tok))
        col += len(tok)
    if len(out) != count:
        raise ParseError(f"expected {count} integers, got {len(out)}", lineno, 1)
    return out


def _pairs(lines, order: int) -> list[tuple[int, int]]:
    pairs = []
    for lineno, body in lines:
        u, v = _ints(lineno, body, 2)
        for x in (u, v):
            if x >= order:
                raise ParseError(f"vertex {x} out of range for order {order}", lineno, body.index(str(x)) + 1)
        pairs.append((u, v))
    return pairs


def parse_tournament(text: str) -> BipartiteTournament:
    lines = _lines(text)
    if not lines:
        raise ParseError("empty input", 1, 1)
    lineno, head = lines[0]
    m, n = _ints(lineno, head, 2)
    if m < 1 or n < 1:
        raise ParseError("partite sizes must be positive", lineno, 1)
    bits = []
    for lineno, body in lines[1:]:
        for col, ch in enumerate(body, start=1):
            if ch in "01":
                bits.append(ch)
            elif not ch.isspace():
                raise ParseError(f"unexpected character {ch!r} in bit string", lineno, col)
    if len(bits) != m * n:
        last = lines[-1][0]
        raise ParseError(f"expected {m * n} bits for {m}x{n}, got {len(bits)}", last, 1)
    return bt_from_matrix(m, n, "".join(bits))


def parse_digraph(text: str) -> Digraph:
    lines = _lines(text)
    if not lines:
        raise ParseError("empty input", 1, 1)
    lineno, head = lines[0]
    word, _, rest = head.strip().partition(" ")
    if word != "digraph":
        raise ParseError("expected header 'digraph N'", lineno, 1)
    (order,) = _ints(lineno, rest, 1)
    pairs = _pairs(lines[1:], order)
    for (u, v), (lineno, _) in zip(pairs, lines[1:]):
        if u == v:
            raise ParseError(f"loop at vertex {u}", lineno, 1)
    return Digraph.from_arcs(order, pairs)


def parse_graph(text: str) -> SimpleGraph:
    lines = _lines(text)
    if not lines:
        raise ParseError("empty input", 1, 1)
    lineno, head = lines[0]
    word, _, rest = head.strip().partition(" ")
    if word != "graph":
        raise ParseError("expected header 'graph N'", lineno, 1)
    (order,) = _ints(lineno, rest, 1)
    pairs = _pairs(lines[1:], order)
    for (u, v), (lineno, _) in zip(pairs, lines[1:]):
        if u == v:
            raise ParseError(f"loop at vertex {u}", lineno, 1)
    return SimpleGraph.from_edges(order, pairs)


def parse_any(text: str) -> Parsed:
    """Dispatch on the header line."""
    lines = _lines(text)
    if not lines:
        raise ParseError("empty input", 1, 1)
    first = lines[0][1].split()[0]
    if first == "digraph":
        return parse_digraph(text)
    if first == "graph":
        return parse_graph(text)
    return parse_tournament(text)


# ---------------------------------------------------------------------------
# rendering

def format_tournament(t: BipartiteTournament) -> str:
    return f"{t.m} {t.n}\n{t.bitstring()}\n"


def format_graph(g: SimpleGraph) -> str:
    return f"graph {g.order}\n" + "".join(f"{u} {v}\n" for u, v in g.edges())


def format_digraph(d: Digraph) -> str:
    return f"digraph {d.order}\n" + "".join(f"{u} {v}\n" for u, v in d.arcs())


def edge_list(g: SimpleGraph) -> str:
    return "".join(f"{u} {v}\n" for u, v in g.edges())


def matrix(obj: Parsed) -> str:
    """0/1 rows: the orientation matrix of a tournament, else the adjacency matrix."""
    if isinstance(obj, BipartiteTournament):
        bits = obj.bitstring()
        return "".join(bits[i * obj.n:(i + 1) * obj.n] + "\n" for i in range(obj.m))
    adj = obj.out_adj if isinstance(obj, Digraph) else obj.adj
    return "".join("".join(str(nb >> v & 1) for v in range(obj.order)) + "\n" for nb in adj)


def to_dot(obj: Parsed, name: str = "G") -> str:
    if isinstance(obj, SimpleGraph):
        lines = [f"graph {name} {{"]
        lines += [f"  {v};" for v in range(obj.order)]
        lines += [f"  {u} -- {v};" for u, v in obj.edges()]
        return "\n".join(lines + ["}"]) + "\n"
    if isinstance(obj, BipartiteTournament):
        labels = [obj.label(v) for v in range(obj.order)]
        arcs = [(labels[u], labels[v]) for u, v in bt_to_digraph(obj).arcs()]
        lines = [f"digraph {name} {{", "  rankdir=TB;"]
        lines.append("  { rank=same; " + " ".join(f"{x};" for x in labels[:obj.m]) + " }")
        lines.append("  { rank=same; " + " ".join(f"{x};" for x in labels[obj.m:]) + " }")
        lines += [f"  {a} -> {b};" for a, b in arcs]
        return "\n".join(lines + ["}"]) + "\n"
    lines = [f"digraph {name} {{"]
    lines += [f"  {v};" for v in range(obj.order)]
    lines += [f"  {u} -> {v};" for u, v in obj.arcs()]
    return "\n".join(lines + ["}"]) + "\n"
