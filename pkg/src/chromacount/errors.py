"""Shared exception types."""


class InvalidParameterError(ValueError):
    """Argument outside an operation's documented domain."""


class Graph6ParseError(ValueError):
    """Malformed graph6 input; ``offset`` is the first offending byte."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (byte offset {offset})")
        self.offset = offset


class UnsupportedSizeError(ValueError):
    """Graph too large for single-byte graph6 serialization."""


class CapExceededError(RuntimeError):
    """Requested work above the configured size cap."""
