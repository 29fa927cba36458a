"""Graph abstraction shared by every backend, view and algorithm.

A graph is described by a :class:`GraphKind` capability record (directedness,
self-loops, parallel edges, weightedness) that is fixed for the lifetime of
the instance and gates every mutation.  Vertices are arbitrary hashable
payloads; edges are opaque references that resolve to ``(source, target,
weight)`` through the owning graph.  All iteration surfaces are
insertion-ordered so that identical construction sequences produce identical
behaviour, run after run.
"""

from __future__ import annotations

from abc import ABC, abstractmethod
from dataclasses import dataclass
from typing import Any, Hashable, Iterator, NamedTuple

from .errors import CapabilityError, GraphKindError

Vertex = Hashable
Edge = Any  # opaque per-backend edge reference, usable as a map key


@dataclass(frozen=True)
class GraphKind:
    """Capability record governing the legality of every mutation."""

    directed: bool = False
    allows_self_loops: bool = False
    allows_multiple_edges: bool = False
    weighted: bool = False

    @property
    def undirected(self) -> bool:
        return not self.directed


@dataclass(frozen=True)
class GraphBuilderSpec:
    """Requested capabilities for :func:`build_graph`.

    The returned graph's :class:`GraphKind` equals the spec field for field.
    """

    directed: bool = False
    self_loops: bool = False
    multi_edges: bool = False
    weighted: bool = False

    def kind(self) -> GraphKind:
        return GraphKind(
            directed=self.directed,
            allows_self_loops=self.self_loops,
            allows_multiple_edges=self.multi_edges,
            weighted=self.weighted,
        )


class AddVertexResult(NamedTuple):
    """Outcome of ``add_vertex``: the (possibly pre-existing) ref and a flag.

    ``added`` is False when the payload was already present; the call is then
    a no-op and ``ref`` is the existing vertex.
    """

    ref: Vertex
    added: bool


class Graph(ABC):
    """The interface every backend implements and every algorithm consumes.

    Concurrency contract: instances are not internally synchronized.  A
    writer requires exclusive access; any number of readers may share a
    graph that nobody is mutating.  Algorithms in this library only read.
    """

    # ------------------------------------------------------------- queries

    @property
    @abstractmethod
    def kind(self) -> GraphKind: ...

    @property
    @abstractmethod
    def vertex_count(self) -> int: ...

    @property
    @abstractmethod
    def edge_count(self) -> int: ...

    @abstractmethod
    def vertices(self) -> Iterator[Vertex]:
        """Vertices in insertion order."""

    @abstractmethod
    def edges(self) -> Iterator[Edge]:
        """Edges in insertion order."""

    @abstractmethod
    def contains_vertex(self, v: Vertex) -> bool: ...

    @abstractmethod
    def edge_source(self, e: Edge) -> Vertex: ...

    @abstractmethod
    def edge_target(self, e: Edge) -> Vertex: ...

    @abstractmethod
    def edge_weight(self, e: Edge) -> float:
        """Weight of ``e``; unweighted graphs uniformly report 1.0."""

    @abstractmethod
    def edge_index(self, e: Edge) -> int:
        """Insertion sequence number of ``e`` (stable until removal)."""

    @abstractmethod
    def get_edge(self, u: Vertex, v: Vertex) -> Edge | None:
        """Some edge joining ``u`` and ``v`` or None.

        Undirected lookups are symmetric.  With parallel edges the
        earliest-inserted match is returned.
        """

    @abstractmethod
    def edges_of(self, v: Vertex) -> list[Edge]:
        """All edges touching ``v`` (in and out for directed graphs)."""

    @abstractmethod
    def out_edges_of(self, v: Vertex) -> list[Edge]: ...

    @abstractmethod
    def in_edges_of(self, v: Vertex) -> list[Edge]: ...

    @abstractmethod
    def degree_of(self, v: Vertex) -> int:
        """Incident edge count; undirected self-loops count twice, directed
        degree is in-degree plus out-degree."""

    @abstractmethod
    def in_degree_of(self, v: Vertex) -> int: ...

    @abstractmethod
    def out_degree_of(self, v: Vertex) -> int: ...

    # ----------------------------------------------------------- mutations

    @abstractmethod
    def add_vertex(self, payload: Vertex) -> AddVertexResult: ...

    @abstractmethod
    def add_edge(self, u: Vertex, v: Vertex, weight: float | None = None) -> Edge: ...

    @abstractmethod
    def remove_vertex(self, v: Vertex) -> bool:
        """Remove ``v`` and its incident edges; False if absent."""

    @abstractmethod
    def remove_edge(self, e: Edge) -> bool: ...

    @abstractmethod
    def set_edge_weight(self, e: Edge, weight: float) -> None: ...

    # -------------------------------------------------------- conveniences

    def neighbors_of(self, v: Vertex) -> list[Vertex]:
        """Adjacent vertices in edge order (successors when directed).

        Parallel edges repeat their endpoint; a self-loop contributes ``v``
        itself once (even though it counts twice towards undirected degree).
        """
        return [self.opposite(e, v) for e in self.out_edges_of(v)]

    def opposite(self, e: Edge, v: Vertex) -> Vertex:
        """The endpoint of ``e`` other than ``v`` (``v`` for self-loops)."""
        s, t = self.edge_source(e), self.edge_target(e)
        return t if v == s else s

    def endpoints(self, e: Edge) -> tuple[Vertex, Vertex]:
        return self.edge_source(e), self.edge_target(e)

    def vertex_list(self) -> list[Vertex]:
        return list(self.vertices())

    def edge_list(self) -> list[Edge]:
        return list(self.edges())

    # --------------------------------------------------- shared validation

    def _require_vertex(self, v: Vertex) -> None:
        from .errors import VertexNotFoundError

        if not self.contains_vertex(v):
            raise VertexNotFoundError(f"vertex {v!r} is not in the graph")

    def _check_edge_legal(self, u: Vertex, v: Vertex) -> None:
        """Capability gate shared by mutable backends."""
        self._require_vertex(u)
        self._require_vertex(v)
        if u == v and not self.kind.allows_self_loops:
            raise CapabilityError(f"self-loops are not allowed (at {u!r})")
        if not self.kind.allows_multiple_edges and self.get_edge(u, v) is not None:
            raise CapabilityError(f"parallel edge ({u!r}, {v!r}) is not allowed")

    def __repr__(self) -> str:  # pragma: no cover - debugging aid
        k = self.kind
        bits = "directed" if k.directed else "undirected"
        if k.weighted:
            bits += " weighted"
        return f"<{type(self).__name__} {bits} n={self.vertex_count} m={self.edge_count}>"


def build_graph(spec: GraphBuilderSpec | None = None, **capabilities: bool) -> Graph:
    """Create an empty mutable graph with exactly the requested capabilities.

    Accepts either a :class:`GraphBuilderSpec` or the spec fields as keyword
    arguments (``directed``, ``self_loops``, ``multi_edges``, ``weighted``).
    The result is backed by the adjacency backend, the right default for
    incremental construction.
    """
    if spec is None:
        spec = GraphBuilderSpec(**capabilities)
    elif capabilities:
        raise TypeError("pass either a GraphBuilderSpec or keyword flags, not both")
    from .adjacency import AdjacencyGraph

    return AdjacencyGraph(spec.kind())


def require_undirected(g: Graph, what: str) -> None:
    if g.kind.directed:
        raise GraphKindError(f"{what} requires an undirected graph")


def require_directed(g: Graph, what: str) -> None:
    if not g.kind.directed:
        raise GraphKindError(f"{what} requires a directed graph")
