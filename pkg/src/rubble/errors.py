"""Exception types shared across the package."""


class RubbleError(Exception):
    """Base class for all errors raised by this package."""


class GraphError(RubbleError):
    """Problem with a graph definition or encoding."""


class SelfLoopError(GraphError):
    """An edge joins a vertex to itself."""


class OutOfRangeError(GraphError):
    """A vertex index or parameter is outside its allowed range."""


class DisconnectedError(GraphError):
    """The graph is not connected."""


class MalformedError(GraphError):
    """Unparseable input (graph6 record, JSON document, distribution text)."""


class TooLargeError(GraphError):
    """Input exceeds a hard size cap (vertex count, pebble count, ...)."""


class IllegalMoveError(RubbleError):
    """A move cannot be applied to the given distribution."""


class InvalidMoveError(RubbleError):
    """A move does not respect the graph's edges."""


class NotOrderableError(RubbleError):
    """A move multiset admits no executable ordering from the distribution."""


class NotATreeError(RubbleError):
    """The operation requires a tree."""


class BudgetExceededError(RubbleError):
    """The configured work budget ran out before an answer was found."""
