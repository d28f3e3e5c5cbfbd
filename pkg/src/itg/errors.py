"""Exception hierarchy shared across the library."""


class Error(Exception):
    """Base class for all library errors."""


class GraphConstructionError(Error, ValueError):
    """Invalid vertex/edge data passed to a graph constructor."""


class Graph6Error(Error, ValueError):
    """Malformed graph6 input.

    Attributes:
        offset: byte offset of the first offending byte, or None when the
            problem is not tied to a single byte (e.g. truncated input).
    """

    def __init__(self, message, offset=None):
        super().__init__(message if offset is None else f"{message} (byte offset {offset})")
        self.offset = offset


class PreconditionError(Error, ValueError):
    """An operation was called outside its stated domain."""


class GrowthLimitError(Error, RuntimeError):
    """A projected iterate would exceed the configured vertex cap.

    Attributes:
        projected: vertex count the next application would produce.
        cap: the configured limit that was exceeded.
    """

    def __init__(self, projected, cap):
        super().__init__(
            f"projected iterate order {projected} exceeds the vertex cap {cap}"
        )
        self.projected = projected
        self.cap = cap


class BoundDomainError(Error, ValueError):
    """A closed-form bound is undefined for the given parameters."""
