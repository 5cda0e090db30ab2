"""Exception hierarchy shared by all modules."""


class PlaneSatError(Exception):
    """Base class for every error raised by planesat."""


class GraphError(PlaneSatError, ValueError):
    """Invalid host graph input (loop, duplicate edge, vertex out of range)."""

    def __init__(self, message, pair=None):
        super().__init__(message)
        self.pair = pair


class DrawingError(PlaneSatError, ValueError):
    """Invalid drawing, region, corner or anchor."""


class NotAddableError(DrawingError):
    """The requested edge cannot be drawn in the requested region."""


class DecodeError(PlaneSatError, ValueError):
    """Malformed serialized input; ``offset`` is a byte position when known."""

    def __init__(self, message, offset=None):
        if offset is not None:
            message = f"{message} (at byte offset {offset})"
        super().__init__(message)
        self.offset = offset


class PreconditionError(PlaneSatError, ValueError):
    """An operation was called outside its documented domain."""


class ConstructionError(PlaneSatError):
    """A construction produced output that fails its own guarantee."""
