"""Exception hierarchy shared by all algebra modules."""

from typing import Optional


class AlgebraError(ValueError):
    """Base class for invalid input to an algebraic operation."""


class ParseError(AlgebraError):
    """Input text does not follow the forest or polynomial grammar."""

    def __init__(self, message: str, text: str, offset: int):
        super().__init__(f"{message} at offset {offset}")
        self.text = text
        self.offset = offset


class DomainError(AlgebraError):
    """An operation was applied outside the subspace it is defined on."""

    def __init__(self, operation: str, word: str, expected: str):
        shown = word if word else "1"
        super().__init__(f"{operation}: word '{shown}' is not in {expected}")
        self.operation = operation
        self.word = word
        self.expected = expected


class DivergenceError(AlgebraError):
    """A zeta value was requested for a non-admissible index."""


class PreconditionError(AlgebraError):
    """Arguments violate a documented precondition."""


class ResourceLimitError(AlgebraError):
    """A requested size exceeds the configured cap."""

    def __init__(self, what: str, requested: int, cap: int):
        super().__init__(f"{what} {requested} exceeds configured cap {cap}")
        self.what = what
        self.requested = requested
        self.cap = cap


class InvariantViolation(RuntimeError):
    """An internal invariant broke; indicates a bug, not bad input."""

    def __init__(self, message: str, detail: Optional[str] = None):
        super().__init__(message if detail is None else f"{message}: {detail}")
        self.detail = detail
