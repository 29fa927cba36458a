"""DIMACS challenge formats.

Shortest-path format (9th challenge): ``p sp n m`` header, ``a u v w`` arc
lines, ``c`` comments.  Edge format (2nd challenge, clique/colouring):
``p edge n m`` header and ``e u v`` lines.  Vertex ids are 1-based on the
wire and shifted to 0-based integers internally.
"""

from __future__ import annotations

from ..adjacency import AdjacencyGraph
from ..core import Graph, GraphKind
from ..errors import CapabilityError, ParseError

_SP_KIND = GraphKind(
    directed=True, allows_self_loops=True, allows_multiple_edges=True, weighted=True
)


def _tokens(line: str):
    return line.split()


def _parse_header(parts, lineno, expected_tag):
    if len(parts) != 4:
        raise ParseError(f"malformed problem line, want 'p {expected_tag} n m'", lineno)
    if parts[1] != expected_tag:
        raise ParseError(f"unsupported problem type {parts[1]!r}", lineno, 3)
    try:
        n, m = int(parts[2]), int(parts[3])
    except ValueError:
        raise ParseError("vertex/edge counts must be integers", lineno, 3) from None
    if n < 0 or m < 0:
        raise ParseError("vertex/edge counts must be non-negative", lineno, 3)
    return n, m


def _parse_endpoint(tok: str, n: int, lineno: int, col: int) -> int:
    try:
        u = int(tok)
    except ValueError:
        raise ParseError(f"vertex id {tok!r} is not an integer", lineno, col) from None
    if not 1 <= u <= n:
        raise ParseError(f"vertex id {u} out of range 1..{n}", lineno, col)
    return u - 1


def read_dimacs_sp(lines) -> Graph:
    """Parse the 9th-challenge shortest-path format into a directed
    weighted graph (parallel arcs and loops permitted)."""
    if isinstance(lines, str):
        lines = lines.splitlines()
    g = None
    n = m = 0
    arcs = 0
    lineno = 0
    for lineno, raw in enumerate(lines, start=1):
        parts = _tokens(raw)
        if not parts or parts[0] == "c":
            continue
        if parts[0] == "p":
            if g is not None:
                raise ParseError("duplicate problem line", lineno)
            n, m = _parse_header(parts, lineno, "sp")
            g = AdjacencyGraph(_SP_KIND)
            for v in range(n):
                g.add_vertex(v)
        elif parts[0] == "a":
            if g is None:
                raise ParseError("arc line before problem line", lineno)
            if len(parts) != 4:
                raise ParseError("malformed arc line, want 'a u v w'", lineno)
            u = _parse_endpoint(parts[1], n, lineno, 2)
            v = _parse_endpoint(parts[2], n, lineno, 3)
            try:
                w = float(parts[3]) if "." in parts[3] else int(parts[3])
            except ValueError:
                raise ParseError(f"weight {parts[3]!r} is not numeric", lineno, 4) from None
            g.add_edge(u, v, weight=w)
            arcs += 1
        else:
            raise ParseError(f"unknown line type {parts[0]!r}", lineno)
    if g is None:
        raise ParseError("missing problem line", max(lineno, 1))
    if arcs != m:
        raise ParseError(f"header declared {m} arcs but {arcs} were given", lineno)
    return g


def _format_weight(w: float) -> str:
    return str(int(w)) if float(w).is_integer() else repr(float(w))


def write_dimacs_sp(g: Graph, out) -> None:
    """Emit the 9th-challenge format; vertices by insertion order, 1-based."""
    ids = {v: i + 1 for i, v in enumerate(g.vertices())}
    out.write(f"p sp {g.vertex_count} {g.edge_count}\n")
    for e in g.edges():
        u, v = ids[g.edge_source(e)], ids[g.edge_target(e)]
        out.write(f"a {u} {v} {_format_weight(g.edge_weight(e))}\n")


def read_dimacs_color(lines, allow_multi: bool = False) -> Graph:
    """Parse the 2nd-challenge edge format into an undirected graph.

    In the default simple mode a repeated ``e`` line is a positioned error.
    """
    if isinstance(lines, str):
        lines = lines.splitlines()
    kind = GraphKind(allows_self_loops=allow_multi, allows_multiple_edges=allow_multi)
    g = None
    n = m = 0
    given = 0
    lineno = 0
    for lineno, raw in enumerate(lines, start=1):
        parts = _tokens(raw)
        if not parts or parts[0] == "c":
            continue
        if parts[0] == "p":
            if g is not None:
                raise ParseError("duplicate problem line", lineno)
            n, m = _parse_header(parts, lineno, "edge")
            g = AdjacencyGraph(kind)
            for v in range(n):
                g.add_vertex(v)
        elif parts[0] == "e":
            if g is None:
                raise ParseError("edge line before problem line", lineno)
            if len(parts) != 3:
                raise ParseError("malformed edge line, want 'e u v'", lineno)
            u = _parse_endpoint(parts[1], n, lineno, 2)
            v = _parse_endpoint(parts[2], n, lineno, 3)
            try:
                g.add_edge(u, v)
            except CapabilityError:
                raise ParseError(
                    f"edge ({u + 1}, {v + 1}) repeats an earlier edge", lineno
                ) from None
            given += 1
        else:
            raise ParseError(f"unknown line type {parts[0]!r}", lineno)
    if g is None:
        raise ParseError("missing problem line", max(lineno, 1))
    if given != m:
        raise ParseError(f"header declared {m} edges but {given} were given", lineno)
    return g


def write_dimacs_color(g: Graph, out) -> None:
    ids = {v: i + 1 for i, v in enumerate(g.vertices())}
    out.write(f"p edge {g.vertex_count} {g.edge_count}\n")
    for e in g.edges():
        out.write(f"e {ids[g.edge_source(e)]} {ids[g.edge_target(e)]}\n")
