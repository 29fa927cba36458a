"""Exception hierarchy shared by all edgekit modules."""

from __future__ import annotations


class GraphError(Exception):
    """Base class for every error raised by edgekit."""


class VertexNotFoundError(GraphError):
    """An operation referenced a vertex that is not in the graph."""


class EdgeNotFoundError(GraphError):
    """An operation referenced an edge that is not in the graph."""


class CapabilityError(GraphError):
    """A mutation violates the graph's capability record.

    Raised for self-loops or parallel edges on graphs that forbid them and
    for weight writes on unweighted graphs.  Distinct from
    :class:`VertexNotFoundError` so callers can tell a structural rejection
    from a missing endpoint.
    """


class ImmutableGraphError(GraphError):
    """A structural mutation was attempted on an immutable graph.

    Raised by the CSR backend and by unmodifiable views.
    """


class GraphKindError(GraphError):
    """An algorithm received a graph of the wrong kind (e.g. directed MST)."""


class NegativeWeightError(GraphError):
    """A non-negative-weight algorithm encountered a negative edge."""

    def __init__(self, message, edge=None):
        super().__init__(message)
        self.edge = edge


class NegativeCycleError(GraphError):
    """A reachable negative-weight cycle was found.

    The ``cycle`` attribute carries the witness as a list of edges whose
    weights sum to a negative value.
    """

    def __init__(self, message, cycle):
        super().__init__(message)
        self.cycle = cycle


class NotBipartiteError(GraphError):
    """A bipartite-only algorithm received a non-bipartite graph.

    The ``odd_cycle`` attribute carries an odd closed walk as a vertex list.
    """

    def __init__(self, message, odd_cycle=None):
        super().__init__(message)
        self.odd_cycle = odd_cycle


class NotEulerianError(GraphError):
    """The graph violates an Euler-circuit condition (named in the message)."""


class ParseError(GraphError):
    """Malformed input data.  Carries a 1-based ``line`` and ``column``."""

    def __init__(self, message, line, column=1):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column
