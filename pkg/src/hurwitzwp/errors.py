"""Exception hierarchy shared by every module."""

from __future__ import annotations


class HurwitzError(Exception):
    """Base class for all errors raised by this package."""


class MalformedInputError(HurwitzError, ValueError):
    """A letter, index or shape does not fit the declared ambient object."""


class RankMismatchError(HurwitzError, ValueError):
    pass


class InvalidInputError(HurwitzError, ValueError):
    """The input is well formed but outside the operation's domain."""


class UnsupportedRankError(HurwitzError, ValueError):
    pass


class PreconditionError(HurwitzError, ValueError):
    pass


class IndexOutOfRangeError(HurwitzError, IndexError):
    pass


class ParseError(HurwitzError, ValueError):
    """Text input could not be parsed; carries a 1-based line/column."""

    def __init__(self, message: str, line: int = 1, column: int = 1):
        self.message = message
        self.line = line
        self.column = column
        super().__init__(f"{message} (line {line}, column {column})")
