"""Exception hierarchy shared by every divlab module."""

from __future__ import annotations


class DivlabError(Exception):
    """Base class for all library errors."""


class FactorizationIncomplete(DivlabError):
    """A decision needed a prime factor the factoring budget could not find."""

    def __init__(self, value: int, cofactor: int) -> None:
        super().__init__(f"could not fully factor {value}: cofactor {cofactor} unresolved")
        self.value = value
        self.cofactor = cofactor


class RingMismatch(DivlabError, ValueError):
    """A value does not belong to the ring it was placed in."""


class UnsupportedOperation(DivlabError):
    """The requested operation is not available for this ring."""


class DivisorZero(DivlabError, ZeroDivisionError):
    pass


class DivisorConstant(DivlabError, ValueError):
    pass


class ZeroPolynomial(DivlabError, ValueError):
    pass


class InternalInvariantViolation(DivlabError, AssertionError):
    pass


class DIsSquare(DivlabError, ValueError):
    pass


class NotPrime(DivlabError, ValueError):
    pass


class PreconditionError(DivlabError, ValueError):
    pass


class ExprSyntaxError(DivlabError, ValueError):
    """Parse failure with the character offset where it happened."""

    def __init__(self, message: str, position: int, expected: tuple[str, ...] = ()) -> None:
        detail = f"{message} at offset {position}"
        if expected:
            detail += f" (expected {', '.join(expected)})"
        super().__init__(detail)
        self.position = position
        self.expected = expected


class VariableArity(DivlabError, ValueError):
    pass
