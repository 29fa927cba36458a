"""Vertex cover heuristics: degree-greedy and the matching-based
2-approximation."""

from __future__ import annotations

from .core import Graph, require_undirected


def vertex_cover(g: Graph, method: str = "two_approx") -> list:
    """A vertex set touching every edge.

    ``greedy`` repeatedly takes the vertex covering the most uncovered
    edges; ``two_approx`` takes both endpoints of a maximal matching and is
    never worse than twice the optimum.  Self-loop vertices are forced into
    the cover first.
    """
    require_undirected(g, "vertex_cover")
    if method not in ("greedy", "two_approx"):
        raise ValueError(f"unknown vertex cover method {method!r}")

    cover: dict = {}
    uncovered: dict = {}
    for e in g.edges():
        u, v = g.edge_source(e), g.edge_target(e)
        if u == v:
            cover[u] = None
        else:
            uncovered[e] = (u, v)
    uncovered = {
        e: (u, v) for e, (u, v) in uncovered.items() if u not in cover and v not in cover
    }

    if method == "two_approx":
        for e, (u, v) in uncovered.items():
            if u not in cover and v not in cover:  # maximal matching edge
                cover[u] = None
                cover[v] = None
        return list(cover)

    # degree greedy
    incident: dict = {}
    for e, (u, v) in uncovered.items():
        incident.setdefault(u, {})[e] = None
        incident.setdefault(v, {})[e] = None
    remaining = dict(uncovered)
    while remaining:
        best = None
        best_deg = 0
        for v, edges in incident.items():
            if v in cover:
                continue
            d = len(edges)
            if d > best_deg:
                best, best_deg = v, d
        cover[best] = None
        for e in list(incident[best]):
            u, v = remaining.pop(e)
            incident[u].pop(e, None)
            incident[v].pop(e, None)
    return list(cover)


def is_vertex_cover(g: Graph, cover) -> bool:
    chosen = set(cover)
    return all(
        g.edge_source(e) in chosen or g.edge_target(e) in chosen for e in g.edges()
    )
