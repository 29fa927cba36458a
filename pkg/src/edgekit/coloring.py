"""Greedy vertex-colouring heuristics, including saturation-degree (DSatur)."""

from __future__ import annotations

from dataclasses import dataclass

from .core import Graph, require_undirected
from .rng import new_rng


@dataclass
class Coloring:
    """Proper colouring: adjacent vertices always differ."""

    colors: dict  # vertex -> dense colour id from 0
    count: int


def _neighbor_sets(g: Graph) -> dict:
    nbr: dict = {v: set() for v in g.vertices()}
    for e in g.edges():
        u, v = g.edge_source(e), g.edge_target(e)
        if u != v:
            nbr[u].add(v)
            nbr[v].add(u)
    return nbr


def _greedy_along(order, nbr) -> Coloring:
    colors: dict = {}
    for v in order:
        used = {colors[w] for w in nbr[v] if w in colors}
        c = 0
        while c in used:
            c += 1
        colors[v] = c
    return Coloring(colors, max(colors.values()) + 1 if colors else 0)


def color(g: Graph, strategy: str = "greedy", seed: int = 0) -> Coloring:
    """Heuristic proper colouring.

    Strategies: ``greedy`` (insertion order), ``random_greedy`` (seeded
    shuffle of the order), ``largest_degree_first``,
    ``smallest_degree_last`` and ``saturation`` (DSatur; exact on
    bipartite graphs).
    """
    require_undirected(g, "color")
    nbr = _neighbor_sets(g)
    verts = g.vertex_list()
    if strategy == "greedy":
        return _greedy_along(verts, nbr)
    if strategy == "random_greedy":
        order = list(verts)
        rng = new_rng(seed)
        for i in range(len(order) - 1, 0, -1):  # Fisher-Yates on the order
            j = int(rng.integers(0, i + 1))
            order[i], order[j] = order[j], order[i]
        return _greedy_along(order, nbr)
    if strategy == "largest_degree_first":
        order = sorted(verts, key=lambda v: -len(nbr[v]))  # stable: ties keep order
        return _greedy_along(order, nbr)
    if strategy == "smallest_degree_last":
        return _greedy_along(_smallest_last_order(verts, nbr), nbr)
    if strategy == "saturation":
        return _dsatur(verts, nbr)
    raise ValueError(f"unknown colouring strategy {strategy!r}")


def _smallest_last_order(verts, nbr) -> list:
    deg = {v: len(nbr[v]) for v in verts}
    removed: dict = {}
    removal = []
    for _ in verts:
        best = None
        for v in verts:
            if v in removed:
                continue
            if best is None or deg[v] < deg[best]:
                best = v
        removed[best] = None
        removal.append(best)
        for u in nbr[best]:
            if u not in removed:
                deg[u] -= 1
    removal.reverse()  # colour the last-removed (lowest-degree) vertices last
    return removal


def _dsatur(verts, nbr) -> Coloring:
    colors: dict = {}
    saturation = {v: set() for v in verts}
    deg = {v: len(nbr[v]) for v in verts}
    for _ in verts:
        best = None
        best_key = None
        for v in verts:  # max saturation, then max degree, then insertion
            if v in colors:
                continue
            key = (len(saturation[v]), deg[v])
            if best is None or key > best_key:
                best, best_key = v, key
        used = saturation[best]
        c = 0
        while c in used:
            c += 1
        colors[best] = c
        for u in nbr[best]:
            if u not in colors:
                saturation[u].add(c)
    return Coloring(colors, max(colors.values()) + 1 if colors else 0)


def is_proper(g: Graph, coloring: Coloring) -> bool:
    return all(
        g.edge_source(e) == g.edge_target(e)
        or coloring.colors[g.edge_source(e)] != coloring.colors[g.edge_target(e)]
        for e in g.edges()
    )
