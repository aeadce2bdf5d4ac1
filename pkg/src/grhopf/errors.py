"""Shared exception types."""


class InputError(ValueError):
    """Raised when a caller supplies data outside an operation's domain."""


class GraphParseError(InputError):
    """Malformed graph text; carries the 1-based line and column."""

    def __init__(self, message, line, column):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column
