"""Exception types shared across the package."""


class PathlabError(Exception):
    """Base class for package-specific errors."""


class CapacityError(PathlabError, ValueError):
    """Raised when a construction would exceed the vertex capacity."""


class Graph6Error(PathlabError, ValueError):
    """Raised on malformed graph6 input.

    ``offset`` is the byte position (0-based) where parsing failed.
    """

    def __init__(self, message: str, offset: int | None = None):
        self.offset = offset
        if offset is not None:
            message = f"{message} (byte offset {offset})"
        super().__init__(message)


class InvariantViolation(PathlabError, AssertionError):
    """A guaranteed postcondition failed: this always indicates a bug."""
