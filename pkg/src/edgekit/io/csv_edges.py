"""Comma-separated edge lists: one ``u,v`` or ``u,v,w`` row per edge.

The dialect is deliberately plain: comma delimiter, no quoting, integer
vertex ids (payloads that are not integers cannot round-trip).  Isolated
vertices have no representation in an edge list.
"""

from __future__ import annotations

from ..adjacency import AdjacencyGraph
from ..core import Graph, GraphKind
from ..errors import ParseError


def read_csv(lines, directed: bool = False) -> Graph:
    """Read an edge list; weighted iff rows carry a third column."""
    if isinstance(lines, str):
        lines = lines.splitlines()
    rows = []
    width = None
    for lineno, raw in enumerate(lines, start=1):
        line = raw.strip()
        if not line:
            continue
        parts = line.split(",")
        if width is None:
            if len(parts) not in (2, 3):
                raise ParseError("expected 'u,v' or 'u,v,w'", lineno)
            width = len(parts)
        elif len(parts) != width:
            raise ParseError(
                f"row has {len(parts)} columns, earlier rows had {width}", lineno,
                column=min(len(parts), width) + 1,
            )
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise ParseError("vertex ids must be integers", lineno) from None
        if width == 3:
            try:
                w = float(parts[2])
            except ValueError:
                raise ParseError(f"weight {parts[2]!r} is not numeric", lineno, 3) from None
            rows.append((u, v, w))
        else:
            rows.append((u, v))
    kind = GraphKind(
        directed=directed,
        allows_self_loops=True,
        allows_multiple_edges=True,
        weighted=(width == 3),
    )
    g = AdjacencyGraph(kind)
    for row in rows:
        g.add_vertex(row[0])
        g.add_vertex(row[1])
    for row in rows:
        if width == 3:
            g.add_edge(row[0], row[1], weight=row[2])
        else:
            g.add_edge(row[0], row[1])
    return g


def write_csv(g: Graph, out) -> None:
    """Write the edge list; weights appended on weighted graphs."""
    weighted = g.kind.weighted
    for e in g.edges():
        u, v = g.edge_source(e), g.edge_target(e)
        if weighted:
            w = g.edge_weight(e)
            wtxt = str(int(w)) if float(w).is_integer() else repr(float(w))
            out.write(f"{u},{v},{wtxt}\n")
        else:
            out.write(f"{u},{v}\n")
