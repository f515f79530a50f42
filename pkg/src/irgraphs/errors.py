"""Exception types shared across the package.

Everything derives from GraphError so callers (notably the CLI) can map any
domain failure to a single diagnostic path.
"""


class GraphError(Exception):
    """Base class for all errors raised by this package."""


class CapacityExceeded(GraphError):
    """Graph order exceeds the 64-vertex bit-row capacity (62 for graph6)."""


class IndexOutOfRange(GraphError):
    """A vertex index or vertex-set bit falls outside 0..order-1."""


class SelfLoop(GraphError):
    """An edge (v, v) was supplied; only simple graphs are supported."""


class MalformedGraph6(GraphError):
    """A graph6 line violates the format (length, byte range, or header)."""


class MalformedEdgeList(GraphError):
    """An edge-list text block violates the "n m" + edge-lines format."""


class InvalidParameter(GraphError):
    """A construction or export parameter is out of its documented domain."""


class NotAMember(GraphError):
    """Private-neighborhood query for a vertex outside the given set."""


class NotIrredundant(GraphError):
    """An operation requiring an irredundant input set received one that isn't."""


class InvalidPartition(GraphError):
    """An EPN/iso partition is inconsistent with its set or its graph."""


class PreconditionViolated(GraphError):
    """A skip operation was attempted off the induced-4-cycle pattern."""


class NotIrredundantResult(GraphError):
    """A skip produced a non-irredundant set (input did not match the pattern)."""


class TooManyIRSets(GraphError):
    """IR-set enumeration exceeded the configured node cap."""


class InternalInvariantError(GraphError):
    """A checked internal invariant failed; indicates a bug in this library."""
