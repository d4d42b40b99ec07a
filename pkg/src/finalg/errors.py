"""Exception hierarchy shared by every finalg module."""

from __future__ import annotations

from collections.abc import Sequence

__all__ = [
    "AlgebraError",
    "AxiomViolationError",
    "CapExceededError",
    "ConstructionError",
    "InputError",
    "NotMaximalError",
    "UnknownPropertyError",
    "UnknownTargetError",
]


class AlgebraError(ValueError):
    """Base exception for invalid algebraic input."""


class ConstructionError(AlgebraError):
    """Raised when a ring, module, or map cannot be built from its description."""


class AxiomViolationError(AlgebraError):
    """Raised when a structure fails one of its defining laws.

    ``axiom`` names the violated law and ``witness`` carries the elements
    (as canonical encodings) that exhibit the failure.
    """

    def __init__(self, axiom: str, witness: Sequence[object], detail: str = '') -> None:
        self.axiom = axiom
        self.witness = tuple(witness)
        message = f'{axiom} fails at {self.witness!r}'
        if detail:
            message = f'{message}: {detail}'
        super().__init__(message)


class CapExceededError(AlgebraError):
    """Raised when an exhaustive enumeration would exceed the configured cap."""

    def __init__(self, what: str, size: int, cap: int) -> None:
        self.what = what
        self.size = size
        self.cap = cap
        super().__init__(f'{what} has cardinality {size}, above the enumeration cap {cap}')


class NotMaximalError(AlgebraError):
    """Raised when an operation that needs a maximal ideal receives another ideal."""


class UnknownPropertyError(AlgebraError):
    """Raised for property names missing from the verification registry."""


class UnknownTargetError(AlgebraError):
    """Raised for separation-search targets the searcher does not know."""


class InputError(AlgebraError):
    """Located diagnostic produced while reading or executing an input document."""

    def __init__(self, message: str, *, line: int, column: int, hint: str | None = None) -> None:
        self.message = message
        self.line = line
        self.column = column
        self.hint = hint
        text = f'line {line}, column {column}: {message}'
        if hint:
            text = f'{text} (expected {hint})'
        super().__init__(text)
