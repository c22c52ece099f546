"""Exception types shared across the package."""


class ParseError(ValueError):
    """Malformed skyline text; carries the 1-based line and column."""

    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


class CapacityError(ValueError):
    """An instance exceeds a configured size bound (oracle or renderer)."""


class InternalInvariantError(RuntimeError):
    """Raised when the solver and the tiler disagree.

    This can only come from a bug; it is never recovered from.
    """
