#!/usr/bin/env python3
"""
Exception hierarchy for pringkit.
Every error carries the exit code the command line maps it to.
"""

from typing import Any, Iterable, Optional


class RingKitError(Exception):
    """Base class for all pringkit errors."""
    exitCode = 2


class InvalidParameterError(RingKitError):
    """A construction or operation received a parameter outside its domain."""


class NotPrimeError(InvalidParameterError):
    """A prime was required."""

    def __init__(self, value: int):
        super().__init__(f"{value} is not a prime integer")
        self.value = value


class BaseMismatchError(InvalidParameterError):
    """A module is defined over a different ring than the one it is used with."""


class RingMismatchError(RingKitError):
    """Arithmetic between elements of different rings."""


class ModulusMismatchError(RingKitError):
    """Polynomial arithmetic between different prime fields."""


class PolyDivisionError(RingKitError, ZeroDivisionError):
    """Division by the zero polynomial."""


class UndefinedGcdError(RingKitError):
    """gcd(0, 0) has no monic representative."""


class WitnessError(RingKitError):
    """An error that names the element or pair demonstrating the failure."""

    def __init__(self, message: str, witness: Any = None):
        super().__init__(message)
        self.witness = witness


class HomInvalidError(WitnessError):
    """A table violates a ring homomorphism law."""


class IdealInvalidError(WitnessError):
    """A set of elements is not an ideal."""


class IdentityConditionError(WitnessError):
    """f(1)·(f(a)+j) = f(a)+j fails for some a, j in an amalgamation."""


class ModuleActionError(WitnessError):
    """An action table violates a module law."""


class PreconditionError(RingKitError):
    """An operation's mathematical precondition does not hold."""


class DegenerateInputError(RingKitError):
    """A reduced polynomial vanishes in some component."""


class TableFileError(RingKitError):
    """A hom or action table file could not be read."""


class SizeGuardError(RingKitError):
    """Materializing the ring would exceed the configured cap."""
    exitCode = 3

    def __init__(self, order: int, cap: int, what: str = "ring"):
        super().__init__(f"{what} of order {order} exceeds the size guard ({cap})")
        self.order = order
        self.cap = cap


class InternalInconsistencyError(RingKitError):
    """A verification that theory says cannot fail did fail."""
    exitCode = 1


class RingExprSyntaxError(RingKitError):
    """
    Malformed ring expression, with the offset and the tokens that would have been accepted.

    `position` is the character index into the text and places the caret;
    `offset` is the UTF-8 byte offset reported to users. They differ once the
    text holds a non-ASCII character before the error.
    """

    def __init__(self, message: str, position: int, expected: Optional[Iterable[str]] = None, text: str = ""):
        self.message = message
        self.position = position
        self.offset = len(text[:position].encode("utf-8")) if text else position
        self.expected = sorted(set(expected or ()))
        self.text = text
        detail = f"{message} at offset {self.offset}"
        if self.expected:
            detail += f" (expected one of: {', '.join(self.expected)})"
        super().__init__(detail)

    def caretLine(self) -> str:
        """Render the source with a caret under the failing offset."""
        if not self.text:
            return ""
        return f"{self.text}\n{' ' * self.position}^"


__all__ = [
    "RingKitError",
    "InvalidParameterError",
    "NotPrimeError",
    "BaseMismatchError",
    "RingMismatchError",
    "ModulusMismatchError",
    "PolyDivisionError",
    "UndefinedGcdError",
    "WitnessError",
    "HomInvalidError",
    "IdealInvalidError",
    "IdentityConditionError",
    "ModuleActionError",
    "PreconditionError",
    "DegenerateInputError",
    "TableFileError",
    "SizeGuardError",
    "InternalInconsistencyError",
    "RingExprSyntaxError",
]
