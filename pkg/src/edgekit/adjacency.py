"""Mutable hash-backed storage engine with deterministic iteration.

Vertices and edges live in insertion-ordered maps; per-vertex incidence is
also an insertion-ordered map so removal stays expected O(1).  Plain
hash-order iteration never escapes to callers.  An optional endpoint index
accelerates ``get_edge`` on dense lookup workloads.
"""

from __future__ import annotations

from typing import Iterator

from .core import AddVertexResult, Edge, Graph, GraphKind, Vertex
from .errors import CapabilityError, EdgeNotFoundError


class _EdgeRec:
    """Opaque edge reference; identity-hashed so parallel edges stay distinct."""

    __slots__ = ("_source", "_target", "_weight", "_index")

    def __init__(self, source, target, weight, index):
        self._source = source
        self._target = target
        self._weight = weight
        self._index = index

    def __repr__(self) -> str:
        return f"Edge({self._source!r}->{self._target!r}, w={self._weight}, #{self._index})"


class _VertexRec:
    __slots__ = ("out", "inc", "loops")

    def __init__(self, directed: bool):
        self.out: dict = {}  # ordered set of edges (out-edges when directed)
        self.inc: dict = {} if directed else self.out  # in-edges when directed
        self.loops = 0


class AdjacencyGraph(Graph):
    """Insertion-ordered adjacency-map backend (the default storage engine)."""

    def __init__(self, kind: GraphKind, index_edges: bool = False):
        self._kind = kind
        self._verts: dict[Vertex, _VertexRec] = {}
        self._edges: dict[_EdgeRec, None] = {}
        self._next_index = 0
        # endpoint-pair index: key -> ordered set of matching edges
        self._pair_index: dict | None = {} if index_edges else None

    # ------------------------------------------------------------- queries

    @property
    def kind(self) -> GraphKind:
        return self._kind

    @property
    def vertex_count(self) -> int:
        return len(self._verts)

    @property
    def edge_count(self) -> int:
        return len(self._edges)

    @property
    def indexed(self) -> bool:
        return self._pair_index is not None

    def vertices(self) -> Iterator[Vertex]:
        return iter(self._verts)

    def edges(self) -> Iterator[Edge]:
        return iter(self._edges)

    def contains_vertex(self, v) -> bool:
        return v in self._verts

    def contains_edge(self, e) -> bool:
        return e in self._edges

    def edge_source(self, e):
        return e._source

    def edge_target(self, e):
        return e._target

    def edge_weight(self, e) -> float:
        self._require_edge(e)
        return e._weight

    def edge_index(self, e) -> int:
        self._require_edge(e)
        return e._index

    def _pair_key(self, u, v):
        return (u, v) if self._kind.directed else frozenset((u, v))

    def get_edge(self, u, v):
        self._require_vertex(u)
        self._require_vertex(v)
        if self._pair_index is not None:
            bucket = self._pair_index.get(self._pair_key(u, v))
            if not bucket:
                return None
            return next(iter(bucket))
        for e in self._verts[u].out:
            if e._source == u and e._target == v:
                return e
            if not self._kind.directed and e._source == v and e._target == u:
                return e
        return None

    def edges_of(self, v) -> list:
        self._require_vertex(v)
        rec = self._verts[v]
        if not self._kind.directed:
            return list(rec.out)
        both = list(rec.out)
        both.extend(e for e in rec.inc if e._source != e._target)
        return both

    def out_edges_of(self, v) -> list:
        self._require_vertex(v)
        return list(self._verts[v].out)

    def in_edges_of(self, v) -> list:
        self._require_vertex(v)
        return list(self._verts[v].inc)

    def degree_of(self, v) -> int:
        self._require_vertex(v)
        rec = self._verts[v]
        if self._kind.directed:
            return len(rec.out) + len(rec.inc)
        return len(rec.out) + rec.loops  # loops stored once, counted twice

    def in_degree_of(self, v) -> int:
        self._require_vertex(v)
        rec = self._verts[v]
        return len(rec.inc) if self._kind.directed else len(rec.out) + rec.loops

    def out_degree_of(self, v) -> int:
        self._require_vertex(v)
        rec = self._verts[v]
        return len(rec.out) if self._kind.directed else len(rec.out) + rec.loops

    # ----------------------------------------------------------- mutations

    def add_vertex(self, payload) -> AddVertexResult:
        if payload in self._verts:
            return AddVertexResult(payload, False)
        self._verts[payload] = _VertexRec(self._kind.directed)
        return AddVertexResult(payload, True)

    def add_edge(self, u, v, weight: float | None = None):
        self._check_edge_legal(u, v)
        if weight is not None and not self._kind.weighted:
            raise CapabilityError("cannot assign a weight on an unweighted graph")
        e = _EdgeRec(u, v, 1.0 if weight is None else float(weight), self._next_index)
        self._next_index += 1
        self._edges[e] = None
        self._verts[u].out[e] = None
        if u == v:
            self._verts[u].loops += 1
            if self._kind.directed:
                self._verts[u].inc[e] = None
        else:
            self._verts[v].inc[e] = None
        if self._pair_index is not None:
            self._pair_index.setdefault(self._pair_key(u, v), {})[e] = None
        return e

    def remove_edge(self, e) -> bool:
        if e not in self._edges:
            return False
        del self._edges[e]
        u, v = e._source, e._target
        self._verts[u].out.pop(e, None)
        self._verts[v].inc.pop(e, None)
        if u == v:
            self._verts[u].loops -= 1
        if self._pair_index is not None:
            key = self._pair_key(u, v)
            bucket = self._pair_index.get(key)
            if bucket is not None:
                bucket.pop(e, None)
                if not bucket:
                    del self._pair_index[key]
        return True

    def remove_vertex(self, v) -> bool:
        if v not in self._verts:
            return False
        rec = self._verts[v]
        for e in list(rec.out):
            self.remove_edge(e)
        for e in list(rec.inc):
            self.remove_edge(e)
        del self._verts[v]
        return True

    def set_edge_weight(self, e, weight: float) -> None:
        self._require_edge(e)
        if not self._kind.weighted:
            raise CapabilityError("cannot set a weight on an unweighted graph")
        e._weight = float(weight)

    # -------------------------------------------------------------- helpers

    def _require_edge(self, e) -> None:
        if not isinstance(e, _EdgeRec) or e not in self._edges:
            raise EdgeNotFoundError(f"edge {e!r} is not in the graph")
