"""DOT export (write only): ``--`` edges for undirected graphs, ``->`` for
directed, weights as ``weight`` attributes."""

from __future__ import annotations

import re

from ..core import Graph

_PLAIN_ID = re.compile(r"^[A-Za-z_][A-Za-z0-9_]*$|^-?(\.\d+|\d+(\.\d*)?)$")


def _dot_id(text: str) -> str:
    if _PLAIN_ID.match(text):
        return text
    return '"' + text.replace("\\", "\\\\").replace('"', '\\"') + '"'


def _weight_attr(w: float) -> str:
    txt = str(int(w)) if float(w).is_integer() else repr(float(w))
    return f" [weight={txt}]"


def write_dot(g: Graph, out, labels=None, name: str = "G") -> None:
    """Write ``g`` as a syntactically valid DOT document.

    ``labels`` optionally maps vertices to display strings; the default is
    ``str(vertex)``.  Isolated vertices are listed explicitly.
    """
    labels = labels or {}

    def ident(v) -> str:
        return _dot_id(str(labels.get(v, v)))

    arrow = "->" if g.kind.directed else "--"
    out.write(("digraph " if g.kind.directed else "graph ") + _dot_id(name) + " {\n")
    for v in g.vertices():
        out.write(f"  {ident(v)};\n")
    weighted = g.kind.weighted
    for e in g.edges():
        u, v = g.edge_source(e), g.edge_target(e)
        attr = _weight_attr(g.edge_weight(e)) if weighted else ""
        out.write(f"  {ident(u)} {arrow} {ident(v)}{attr};\n")
    out.write("}\n")
