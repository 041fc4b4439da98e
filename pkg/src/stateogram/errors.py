"""Exception types shared across the package."""

from __future__ import annotations


class DomainError(ValueError):
    """An argument is outside the domain an operation is defined on."""


class UndefinedPhaseError(DomainError):
    """Phase angle requested for a vanishing amplitude."""


class ParseError(ValueError):
    """Circuit text is not syntactically valid JSON.

    Carries the 1-based line/column where decoding failed.
    """

    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"{message} (line {line}, column {column})")
        self.line = line
        self.column = column


class ValidationError(ValueError):
    """A structurally well-formed circuit violates a semantic invariant.

    ``column`` and ``qubit`` identify the offending gate column (0-based)
    and qubit index when the violation is local to one.
    """

    def __init__(self, message: str, column: int | None = None, qubit: int | None = None):
        super().__init__(message)
        self.column = column
        self.qubit = qubit


class ResourceLimitError(RuntimeError):
    """A guard against requests too large for the chosen code path."""
