"""Analytic storage accounting for the two backends.

Footprints are computed from a documented cost model, never measured from
the process: the numbers are deterministic, platform-independent arithmetic
over vertex/edge counts, so backend comparisons reproduce bit-for-bit.

Cost-model table (bytes), chosen to mirror what the structures actually
allocate on a 64-bit CPython:

==========================  =====  ==============================================
constant                    value  models
==========================  =====  ==============================================
``BASE``                       64  object header + bookkeeping slots of a graph
``HASH_ENTRY``                104  one entry of an insertion-ordered hash map
                                   (key/value/hash slots plus growth headroom)
``VERTEX_RECORD``             168  per-vertex record object and its incidence
                                   container headers
``EDGE_RECORD``                64  per-edge record object (endpoints, weight,
                                   sequence number)
``WEIGHT_SLOT``                 8  stored weight (weighted graphs only)
==========================  =====  ==============================================

Adjacency backend, per the implementation's structures:

* each vertex costs ``HASH_ENTRY + VERTEX_RECORD``;
* each edge costs ``EDGE_RECORD`` + one registry ``HASH_ENTRY`` + two
  incidence ``HASH_ENTRY`` (one per endpoint) + ``WEIGHT_SLOT`` if weighted;
* the optional endpoint index adds one ``HASH_ENTRY`` per edge.

CSR backend: the exact ``nbytes`` of the backing numpy arrays plus ``BASE``
(row pointers are int64, indices int32, weights float64).
"""

from __future__ import annotations

from .adjacency import AdjacencyGraph
from .core import Graph, GraphKind
from .csr import CsrGraph

BASE = 64
HASH_ENTRY = 104
VERTEX_RECORD = 168
EDGE_RECORD = 64
WEIGHT_SLOT = 8


def adjacency_footprint_model(
    n: int, m: int, kind: GraphKind, indexed: bool = False
) -> int:
    """Modelled byte count of an adjacency-backed graph with ``n``/``m`` elements."""
    per_vertex = HASH_ENTRY + VERTEX_RECORD
    per_edge = EDGE_RECORD + 3 * HASH_ENTRY
    if kind.weighted:
        per_edge += WEIGHT_SLOT
    if indexed:
        per_edge += HASH_ENTRY
    return BASE + n * per_vertex + m * per_edge


def csr_footprint(g: CsrGraph) -> int:
    return BASE + sum(a.nbytes for a in g.arrays().values())


def memory_footprint(g: Graph) -> int:
    """Analytic storage footprint of ``g`` in bytes (cost model, not OS)."""
    if isinstance(g, CsrGraph):
        return csr_footprint(g)
    if isinstance(g, AdjacencyGraph):
        return adjacency_footprint_model(
            g.vertex_count, g.edge_count, g.kind, indexed=g.indexed
        )
    # views: delegate to the backing graph plus a small wrapper constant
    backing = getattr(g, "backing", None)
    if backing is not None:
        return memory_footprint(backing) + 128
    raise TypeError(f"no cost model for {type(g).__name__}")


def bytes_per_edge(g: Graph) -> float:
    m = g.edge_count
    if m == 0:
        raise ValueError("bytes/edge is undefined for an edgeless graph")
    return memory_footprint(g) / m
