"""Exception types shared across the package."""

from __future__ import annotations


class QhomError(Exception):
    """Base class for all errors raised by qhom."""


class RingMismatchError(QhomError):
    """Operands live over different rings."""


class HomogeneityError(QhomError):
    """An input that must be homogeneous (or degree 0) is not."""


class ComplexError(QhomError):
    """A chain complex or chain map fails a structural check at ``index``."""

    def __init__(self, message: str, index: int | None = None):
        super().__init__(message if index is None else f"{message} (index {index})")
        self.index = index


class TruncationError(QhomError):
    """A requested homological degree exceeds the resolution bound."""


class LiftingError(QhomError):
    """A vector that was expected to lie in a submodule does not."""

    def __init__(self, message: str, index: int | None = None):
        super().__init__(message if index is None else f"{message} (index {index})")
        self.index = index


class NotCohenMacaulayError(QhomError):
    """An operation needing a Cohen-Macaulay ring or module got something else."""


class NotArtinianError(QhomError):
    """An operation needing an Artinian ring got a positive-dimensional one."""


class ParseError(QhomError):
    """Syntax error with 1-based line/column and the set of expected tokens."""

    def __init__(self, message: str, line: int, column: int, expected: tuple[str, ...] = ()):
        self.line = line
        self.column = column
        self.expected = tuple(expected)
        text = f"{line}:{column}: {message}"
        if expected:
            text += " (expected one of: " + ", ".join(expected) + ")"
        super().__init__(text)
