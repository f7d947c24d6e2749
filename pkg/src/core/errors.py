"""Exception types raised by the algebra engine and the expression parser."""

from __future__ import annotations


class QBracketsError(Exception):
    """Base class for all engine errors."""


class AlgebraDomainError(QBracketsError, ValueError):
    """An operand lies outside the subspace an operation is defined on."""


class OrderMismatchError(QBracketsError, ValueError):
    """Truncated series of different orders were combined where equal orders are required."""


class ExpressionSyntaxError(QBracketsError, ValueError):
    """Malformed expression text.

    Attributes:
        line: 1-based line of the offending character
        column: 1-based column of the offending character
        text: The full input that failed to parse
    """

    def __init__(self, message: str, line: int, column: int, text: str = ""):
        super().__init__(f"{message} (line {line}, column {column})")
        self.message = message
        self.line = line
        self.column = column
        self.text = text
