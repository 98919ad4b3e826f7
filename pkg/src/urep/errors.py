"""Exception types shared across the package."""

from __future__ import annotations


class UrepError(Exception):
    """Base class for all errors raised by this package."""


class InvalidWord(UrepError, ValueError):
    pass


class InvalidPattern(UrepError, ValueError):
    pass


class AlphabetTooSmall(UrepError, ValueError):
    pass


class BadEdgeOrder(UrepError, ValueError):
    pass


class BadSize(UrepError, ValueError):
    pass


class BadVertexSet(UrepError, ValueError):
    pass


class ParseError(UrepError, ValueError):
    """Malformed graph or word text.

    ``line`` and ``column`` are 1-based and may be ``None`` when the
    location is not meaningful (e.g. an empty input).
    """

    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        self.message = message
        self.line = line
        self.column = column
        where = ""
        if line is not None:
            where = f"line {line}"
            if column is not None:
                where += f", column {column}"
            where += ": "
        super().__init__(where + message)


class RangeError(ParseError):
    pass


class DuplicateEdge(ParseError):
    pass


class AlphabetMismatch(UrepError, ValueError):
    pass


class UnsupportedPattern(UrepError, ValueError):
    pass


class WrongCore(UrepError, ValueError):
    pass


class BudgetTooSmall(UrepError, ValueError):
    pass


class TooManyLabelings(UrepError, ValueError):
    pass
