"""Exception types shared across the package.

All of these derive from ValueError so callers that do not care about the
distinction can catch a single class.  The CLI maps them to exit code 1.
"""


class SdkeError(ValueError):
    """Base class for domain errors raised by this package."""


class GraphError(SdkeError):
    """Malformed graph construction or parse input."""


class MatchingError(SdkeError):
    """A matching is invalid for its host graph."""


class NotMatchableError(SdkeError):
    """An operation required a graph with a perfect matching."""


class BoundExceededError(SdkeError):
    """An exhaustive computation was asked for an input above its size bound."""
