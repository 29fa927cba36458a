"""Immutable integer-vertex backend in Compressed-Sparse-Rows layout.

Vertices are exactly ``0..n-1`` and edges exactly ``0..m-1`` (edge ``j`` is
the j-th tuple of the input list).  The incidence structure is one
row-pointer/column-index pair for undirected graphs and two (one per
direction) for directed graphs, so both out- and in-neighbour scans are
O(deg).  Rows list incidences in edge-insertion order, which keeps every
query in agreement with the adjacency backend built from the same list.
Built in a single bulk operation; structural edits raise, which is the
price of the compact layout.  Weight updates write the weight array in
place.  Self-loops and parallel edges are always representable.
"""

from __future__ import annotations

from typing import Iterator, Sequence

import numpy as np

from .core import AddVertexResult, Graph, GraphKind, Vertex
from .errors import (
    CapabilityError,
    EdgeNotFoundError,
    ImmutableGraphError,
    VertexNotFoundError,
)


def _pack(n: int, ends: np.ndarray, eids: np.ndarray, others: np.ndarray):
    """Stable counting sort of (endpoint, edge, neighbour) incidences."""
    counts = np.bincount(ends, minlength=n)
    row_ptr = np.zeros(n + 1, dtype=np.int64)
    np.cumsum(counts, out=row_ptr[1:])
    order = np.argsort(ends, kind="stable")
    return row_ptr, eids[order].astype(np.int32), others[order].astype(np.int32)


class CsrGraph(Graph):
    """Write-once read-many storage engine over numpy arrays."""

    def __init__(self, n: int, edges: Sequence, kind: GraphKind):
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        if not (kind.allows_self_loops and kind.allows_multiple_edges):
            raise CapabilityError(
                "the CSR backend always permits self-loops and parallel edges"
            )
        self._kind = kind
        self._n = n

        if isinstance(edges, np.ndarray):
            if edges.ndim != 2 or edges.shape[1] not in (2, 3):
                raise ValueError("edge array must have 2 or 3 columns")
            m = len(edges)
            src = edges[:, 0].astype(np.int32)
            dst = edges[:, 1].astype(np.int32)
            if m and (src.min() < 0 or src.max() >= n or dst.min() < 0 or dst.max() >= n):
                raise VertexNotFoundError(f"endpoint out of range 0..{n - 1}")
            if edges.shape[1] == 3:
                if not kind.weighted:
                    raise CapabilityError("weighted edge array on an unweighted graph")
                w = edges[:, 2].astype(np.float64)
            else:
                w = np.ones(m, dtype=np.float64) if kind.weighted else None
        else:
            m = len(edges)
            src = np.empty(m, dtype=np.int32)
            dst = np.empty(m, dtype=np.int32)
            w = np.ones(m, dtype=np.float64) if kind.weighted else None
            for j, t in enumerate(edges):
                u, v = t[0], t[1]
                if not (0 <= u < n and 0 <= v < n):
                    raise VertexNotFoundError(f"edge {j}: endpoint out of range 0..{n - 1}")
                src[j] = u
                dst[j] = v
                if len(t) > 2:
                    if not kind.weighted:
                        raise CapabilityError("weighted edge tuple on an unweighted graph")
                    w[j] = t[2]
        self._src, self._dst, self._weights = src, dst, w

        eids = np.arange(m, dtype=np.int64)
        if kind.directed:
            self._row_out, self._col_out, self._adj_out = _pack(n, src, eids, dst)
            self._row_in, self._col_in, self._adj_in = _pack(n, dst, eids, src)
        else:
            # one incidence per endpoint, interleaved so each row stays in
            # edge-insertion order; a self-loop yields two entries in its row
            ends = np.empty(2 * m, dtype=np.int64)
            ends[0::2], ends[1::2] = src, dst
            others = np.empty(2 * m, dtype=np.int64)
            others[0::2], others[1::2] = dst, src
            self._row_out, self._col_out, self._adj_out = _pack(
                n, ends, np.repeat(eids, 2), others
            )
            self._row_in, self._col_in, self._adj_in = (
                self._row_out,
                self._col_out,
                self._adj_out,
            )

    # ------------------------------------------------------------- queries

    @property
    def kind(self) -> GraphKind:
        return self._kind

    @property
    def vertex_count(self) -> int:
        return self._n

    @property
    def edge_count(self) -> int:
        return len(self._src)

    @property
    def row_pointers(self) -> np.ndarray:
        return self._row_out

    @property
    def column_indices(self) -> np.ndarray:
        """Neighbour vertex per incidence, aligned with ``row_pointers``."""
        return self._adj_out

    def vertices(self) -> Iterator[Vertex]:
        return iter(range(self._n))

    def edges(self) -> Iterator[int]:
        return iter(range(len(self._src)))

    def contains_vertex(self, v) -> bool:
        return isinstance(v, (int, np.integer)) and 0 <= v < self._n

    def _require_v(self, v) -> int:
        if not self.contains_vertex(v):
            raise VertexNotFoundError(f"vertex {v!r} is not in the graph")
        return int(v)

    def _require_e(self, e) -> int:
        if not isinstance(e, (int, np.integer)) or not 0 <= e < len(self._src):
            raise EdgeNotFoundError(f"edge {e!r} is not in the graph")
        return int(e)

    def edge_source(self, e) -> int:
        return int(self._src[self._require_e(e)])

    def edge_target(self, e) -> int:
        return int(self._dst[self._require_e(e)])

    def edge_weight(self, e) -> float:
        j = self._require_e(e)
        return float(self._weights[j]) if self._kind.weighted else 1.0

    def edge_index(self, e) -> int:
        return self._require_e(e)

    def get_edge(self, u, v):
        u, v = self._require_v(u), self._require_v(v)
        lo, hi = int(self._row_out[u]), int(self._row_out[u + 1])
        for pos in range(lo, hi):
            e = int(self._col_out[pos])
            a, b = int(self._src[e]), int(self._dst[e])
            if (a, b) == (u, v) or (not self._kind.directed and (a, b) == (v, u)):
                return e  # rows are insertion-ordered: first match wins
        return None

    def out_edges_of(self, v) -> list:
        v = self._require_v(v)
        row = self._col_out[self._row_out[v] : self._row_out[v + 1]].tolist()
        if self._kind.directed:
            return row
        # drop the duplicate incidence self-loops contribute
        return list(dict.fromkeys(row))

    def in_edges_of(self, v) -> list:
        if self._kind.directed:
            v = self._require_v(v)
            return self._col_in[self._row_in[v] : self._row_in[v + 1]].tolist()
        return self.out_edges_of(v)

    def edges_of(self, v) -> list:
        if not self._kind.directed:
            return self.out_edges_of(v)
        both = self.out_edges_of(v)
        both.extend(e for e in self.in_edges_of(v) if self._src[e] != self._dst[e])
        return both

    def degree_of(self, v) -> int:
        v = self._require_v(v)
        d = int(self._row_out[v + 1] - self._row_out[v])
        if self._kind.directed:
            d += int(self._row_in[v + 1] - self._row_in[v])
        return d

    def in_degree_of(self, v) -> int:
        v = self._require_v(v)
        return int(self._row_in[v + 1] - self._row_in[v])

    def out_degree_of(self, v) -> int:
        v = self._require_v(v)
        return int(self._row_out[v + 1] - self._row_out[v])

    def neighbors_of(self, v) -> list:
        v = self._require_v(v)
        if self._kind.directed:
            return self._adj_out[self._row_out[v] : self._row_out[v + 1]].tolist()
        src, dst = self._src, self._dst
        return [int(dst[e]) if src[e] == v else int(src[e]) for e in self.out_edges_of(v)]

    # ----------------------------------------------------------- mutations

    def add_vertex(self, payload) -> AddVertexResult:
        raise ImmutableGraphError("the CSR backend is immutable; rebuild instead")

    def add_edge(self, u, v, weight=None):
        raise ImmutableGraphError("the CSR backend is immutable; rebuild instead")

    def remove_vertex(self, v) -> bool:
        raise ImmutableGraphError("the CSR backend is immutable; rebuild instead")

    def remove_edge(self, e) -> bool:
        raise ImmutableGraphError("the CSR backend is immutable; rebuild instead")

    def set_edge_weight(self, e, weight: float) -> None:
        j = self._require_e(e)
        if not self._kind.weighted:
            raise CapabilityError("cannot set a weight on an unweighted graph")
        self._weights[j] = float(weight)  # in-place: the weight array is separate

    # -------------------------------------------------------------- extras

    def arrays(self) -> dict[str, np.ndarray]:
        """The backing arrays (for the analytic memory model and tests)."""
        named = {
            "src": self._src,
            "dst": self._dst,
            "row_out": self._row_out,
            "col_out": self._col_out,
            "adj_out": self._adj_out,
        }
        if self._kind.directed:
            named["row_in"] = self._row_in
            named["col_in"] = self._col_in
            named["adj_in"] = self._adj_in
        if self._weights is not None:
            named["weights"] = self._weights
        return named


def csr_from_edge_list(
    n: int,
    edges: Sequence,
    kind: GraphKind | None = None,
    *,
    directed: bool = False,
    weighted: bool = False,
) -> CsrGraph:
    """Bulk-build a CSR graph from ``(u, v)`` or ``(u, v, w)`` tuples.

    Neighbour queries agree with the adjacency backend built from the same
    list; edge ``j`` keeps its input position ``j``.
    """
    if kind is None:
        kind = GraphKind(
            directed=directed,
            allows_self_loops=True,
            allows_multiple_edges=True,
            weighted=weighted,
        )
    return CsrGraph(n, edges, kind)


def csr_copy_of(g: Graph) -> tuple[CsrGraph, list, dict]:
    """Re-encode any graph as CSR.

    Returns ``(csr, payloads, payload_to_int)`` where ``payloads[i]`` is the
    original vertex stored at integer ``i`` (insertion order preserved).
    """
    payloads = g.vertex_list()
    idx = {p: i for i, p in enumerate(payloads)}
    if g.kind.weighted:
        rows = [
            (idx[g.edge_source(e)], idx[g.edge_target(e)], g.edge_weight(e))
            for e in g.edges()
        ]
    else:
        rows = [(idx[g.edge_source(e)], idx[g.edge_target(e)]) for e in g.edges()]
    csr = csr_from_edge_list(
        len(payloads), rows, directed=g.kind.directed, weighted=g.kind.weighted
    )
    return csr, payloads, idx
