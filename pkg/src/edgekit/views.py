"""Lazy graph wrappers that delegate every query to a backing graph.

A view copies no structure: reads reflect the backing graph's current state.
Structural mutations through subgraph and undirected views are rejected
because they have no faithful expression on the backing graph; the weight
overlay view accepts weight writes into its own overlay map.
"""

from __future__ import annotations

from typing import Callable, Iterator

from .core import AddVertexResult, Edge, Graph, GraphKind, Vertex
from .errors import ImmutableGraphError, VertexNotFoundError


class _View(Graph):
    mutable = False

    def __init__(self, backing: Graph):
        self.backing = backing

    # default: pure delegation ------------------------------------------------

    @property
    def kind(self) -> GraphKind:
        return self.backing.kind

    @property
    def vertex_count(self) -> int:
        return self.backing.vertex_count

    @property
    def edge_count(self) -> int:
        return self.backing.edge_count

    def vertices(self) -> Iterator[Vertex]:
        return self.backing.vertices()

    def edges(self) -> Iterator[Edge]:
        return self.backing.edges()

    def contains_vertex(self, v) -> bool:
        return self.backing.contains_vertex(v)

    def edge_source(self, e):
        return self.backing.edge_source(e)

    def edge_target(self, e):
        return self.backing.edge_target(e)

    def edge_weight(self, e) -> float:
        return self.backing.edge_weight(e)

    def edge_index(self, e) -> int:
        return self.backing.edge_index(e)

    def get_edge(self, u, v):
        return self.backing.get_edge(u, v)

    def edges_of(self, v) -> list:
        return self.backing.edges_of(v)

    def out_edges_of(self, v) -> list:
        return self.backing.out_edges_of(v)

    def in_edges_of(self, v) -> list:
        return self.backing.in_edges_of(v)

    def degree_of(self, v) -> int:
        return self.backing.degree_of(v)

    def in_degree_of(self, v) -> int:
        return self.backing.in_degree_of(v)

    def out_degree_of(self, v) -> int:
        return self.backing.out_degree_of(v)

    # default: mutations are rejected -----------------------------------------

    def _reject(self):
        raise ImmutableGraphError(
            f"{type(self).__name__} does not support this mutation"
        )

    def add_vertex(self, payload) -> AddVertexResult:
        self._reject()

    def add_edge(self, u, v, weight=None):
        self._reject()

    def remove_vertex(self, v) -> bool:
        self._reject()

    def remove_edge(self, e) -> bool:
        self._reject()

    def set_edge_weight(self, e, weight) -> None:
        self._reject()


class SubgraphView(_View):
    """Induced-style subgraph: a vertex is present iff it passes the vertex
    filter; an edge is present iff both endpoints pass and the edge passes."""

    def __init__(self, backing, vertex_filter=None, edge_filter=None):
        super().__init__(backing)
        self._vf = vertex_filter or (lambda v: True)
        self._ef = edge_filter or (lambda e: True)

    def _has_edge(self, e) -> bool:
        return (
            self._vf(self.backing.edge_source(e))
            and self._vf(self.backing.edge_target(e))
            and self._ef(e)
        )

    @property
    def vertex_count(self) -> int:
        return sum(1 for _ in self.vertices())

    @property
    def edge_count(self) -> int:
        return sum(1 for _ in self.edges())

    def vertices(self):
        return (v for v in self.backing.vertices() if self._vf(v))

    def edges(self):
        return (e for e in self.backing.edges() if self._has_edge(e))

    def contains_vertex(self, v) -> bool:
        return self.backing.contains_vertex(v) and self._vf(v)

    def _require(self, v):
        if not self.contains_vertex(v):
            raise VertexNotFoundError(f"vertex {v!r} is not in the subgraph")

    def get_edge(self, u, v):
        self._require(u)
        self._require(v)
        k = self.backing.kind
        for e in self.backing.edges_of(u):
            if not self._has_edge(e):
                continue
            a, b = self.backing.edge_source(e), self.backing.edge_target(e)
            if (a, b) == (u, v) or (not k.directed and (a, b) == (v, u)):
                return e
        return None

    def edges_of(self, v) -> list:
        self._require(v)
        return [e for e in self.backing.edges_of(v) if self._has_edge(e)]

    def out_edges_of(self, v) -> list:
        self._require(v)
        return [e for e in self.backing.out_edges_of(v) if self._has_edge(e)]

    def in_edges_of(self, v) -> list:
        self._require(v)
        return [e for e in self.backing.in_edges_of(v) if self._has_edge(e)]

    def degree_of(self, v) -> int:
        if self.kind.directed:
            return self.in_degree_of(v) + self.out_degree_of(v)
        d = 0
        for e in self.edges_of(v):
            d += 2 if self.backing.edge_source(e) == self.backing.edge_target(e) else 1
        return d

    def in_degree_of(self, v) -> int:
        if not self.kind.directed:
            return self.degree_of(v)
        return len(self.in_edges_of(v))

    def out_degree_of(self, v) -> int:
        if not self.kind.directed:
            return self.degree_of(v)
        return len(self.out_edges_of(v))


class UndirectedView(_View):
    """Presents a directed backing graph as undirected.

    Every arc becomes one undirected edge, so a directed 2-cycle shows up as
    two parallel edges (multiplicity is preserved, not merged).
    """

    def __init__(self, backing: Graph):
        if not backing.kind.directed:
            raise ValueError("backing graph is already undirected")
        super().__init__(backing)

    @property
    def kind(self) -> GraphKind:
        k = self.backing.kind
        return GraphKind(
            directed=False,
            allows_self_loops=k.allows_self_loops,
            allows_multiple_edges=True,
            weighted=k.weighted,
        )

    def get_edge(self, u, v):
        a = self.backing.get_edge(u, v)
        b = self.backing.get_edge(v, u) if u != v else None
        if a is None:
            return b
        if b is None:
            return a
        return a if self.backing.edge_index(a) <= self.backing.edge_index(b) else b

    def edges_of(self, v) -> list:
        return self.backing.edges_of(v)

    def out_edges_of(self, v) -> list:
        return self.backing.edges_of(v)

    def in_edges_of(self, v) -> list:
        return self.backing.edges_of(v)

    def degree_of(self, v) -> int:
        return self.backing.in_degree_of(v) + self.backing.out_degree_of(v)

    def in_degree_of(self, v) -> int:
        return self.degree_of(v)

    def out_degree_of(self, v) -> int:
        return self.degree_of(v)

    def set_edge_weight(self, e, weight) -> None:
        self.backing.set_edge_weight(e, weight)


class WeightedView(_View):
    """Weight overlay: reads prefer the overlay and fall back to the backing
    weight (1.0 when the backing is unweighted); writes go to the overlay."""

    mutable = True

    def __init__(self, backing: Graph, overlay: dict | None = None):
        super().__init__(backing)
        self.overlay: dict = dict(overlay) if overlay else {}

    @property
    def kind(self) -> GraphKind:
        k = self.backing.kind
        return GraphKind(k.directed, k.allows_self_loops, k.allows_multiple_edges, True)

    def edge_weight(self, e) -> float:
        w = self.overlay.get(e)
        return self.backing.edge_weight(e) if w is None else w

    def set_edge_weight(self, e, weight) -> None:
        self.backing.edge_index(e)  # membership check
        self.overlay[e] = float(weight)

    # structure writes pass straight through: the view only reinterprets weights

    def add_vertex(self, payload) -> AddVertexResult:
        return self.backing.add_vertex(payload)

    def add_edge(self, u, v, weight=None):
        e = self.backing.add_edge(u, v)
        if weight is not None:
            self.overlay[e] = float(weight)
        return e

    def remove_vertex(self, v) -> bool:
        for e in list(self.backing.edges_of(v)) if self.backing.contains_vertex(v) else []:
            self.overlay.pop(e, None)
        return self.backing.remove_vertex(v)

    def remove_edge(self, e) -> bool:
        self.overlay.pop(e, None)
        return self.backing.remove_edge(e)


class UnmodifiableView(_View):
    """Read-only facade; every mutation raises, reads track the backing."""


def as_subgraph(
    g: Graph,
    vertex_filter: Callable[[Vertex], bool] | None = None,
    edge_filter: Callable[[Edge], bool] | None = None,
) -> Graph:
    """Live induced-subgraph view of ``g`` (filters must be pure predicates)."""
    return SubgraphView(g, vertex_filter, edge_filter)


def as_undirected(g: Graph) -> Graph:
    """Treat the directed graph ``g`` as undirected (arcs keep multiplicity)."""
    return UndirectedView(g)


def as_weighted(g: Graph, overlay: dict | None = None) -> Graph:
    """Add (or override) weights on ``g`` without touching it."""
    return WeightedView(g, overlay)


def as_unmodifiable(g: Graph) -> Graph:
    """Render ``g`` unmodifiable; reads delegate live."""
    return UnmodifiableView(g)


def materialize(g: Graph) -> Graph:
    """Eager copy of ``g`` into a fresh adjacency-backed graph.

    Mostly useful for testing view equivalence; vertex payloads carry over,
    edges are recreated in iteration order.
    """
    from .adjacency import AdjacencyGraph

    out = AdjacencyGraph(g.kind)
    for v in g.vertices():
        out.add_vertex(v)
    for e in g.edges():
        u, v = g.edge_source(e), g.edge_target(e)
        if g.kind.weighted:
            out.add_edge(u, v, g.edge_weight(e))
        else:
            out.add_edge(u, v)
    return out
