#!/usr/bin/env python3
"""
Uniform interface for finite commutative rings with identity.

Every ring enumerates its elements as canonical integer indices in
[0, order) with index 0 the zero element. Subclasses implement addition,
negation and multiplication on indices; everything else (powers, integer
multiples, characteristic, Element wrappers) is shared here.
"""

from abc import ABC, abstractmethod
from dataclasses import dataclass
from enum import Enum
from functools import cached_property
from typing import Any, Dict, Hashable, Iterator, Tuple

from pringkit.core.errors import InvalidParameterError, RingMismatchError


class RingFamily(Enum):
    """Family tag of a FiniteRing."""
    zmod = "Zmod"
    primeField = "PrimeField"
    quotient = "Quotient"
    product = "Product"
    trivialExt = "TrivialExt"
    amalgamation = "Amalgamation"

    def __str__(self) -> str:
        return self.value


class FiniteRing(ABC):
    """
    A finite commutative ring with identity distinct from zero.

    Subclasses set `family`, call `super().__init__(order)` and implement
    add, neg, mul, oneIndex, params and describe.
    """

    family: RingFamily

    def __init__(self, order: int):
        if order < 2:
            raise InvalidParameterError(f"a ring with identity ≠ 0 has at least 2 elements, got order {order}")
        self._order = order

    @property
    def order(self) -> int:
        """Number of elements."""
        return self._order

    @property
    @abstractmethod
    def oneIndex(self) -> int:
        """Index of the multiplicative identity."""

    @abstractmethod
    def add(self, i: int, j: int) -> int:
        """Index of the sum of elements i and j."""

    @abstractmethod
    def neg(self, i: int) -> int:
        """Index of the additive inverse of element i."""

    @abstractmethod
    def mul(self, i: int, j: int) -> int:
        """Index of the product of elements i and j."""

    @property
    @abstractmethod
    def params(self) -> Dict[str, Any]:
        """Family-specific parameters, in a JSON-friendly form."""

    @abstractmethod
    def describe(self) -> str:
        """Short human-readable name, e.g. 'Z/60'."""

    @abstractmethod
    def signature(self) -> Hashable:
        """Value identifying the ring up to equality of construction data."""

    def formatElement(self, i: int) -> str:
        """Human-readable rendering of element i (defaults to its index)."""
        return str(i)

    def sub(self, i: int, j: int) -> int:
        return self.add(i, self.neg(j))

    def power(self, i: int, exponent: int) -> int:
        """Index of element i raised to a non-negative exponent (square-and-multiply)."""
        if exponent < 0:
            raise InvalidParameterError(f"exponent must be non-negative, got {exponent}")
        result = self.oneIndex
        base = i
        while exponent:
            if exponent & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            exponent >>= 1
        return result

    def intMul(self, k: int, i: int) -> int:
        """Index of the k-fold sum of element i; negative k negates (double-and-add)."""
        if k < 0:
            return self.neg(self.intMul(-k, i))
        result = 0
        addend = i
        while k:
            if k & 1:
                result = self.add(result, addend)
            addend = self.add(addend, addend)
            k >>= 1
        return result

    def fromInteger(self, k: int) -> int:
        """Index of k·1."""
        return self.intMul(k, self.oneIndex)

    @cached_property
    def characteristic(self) -> int:
        """Additive order of 1, found by iteration."""
        one = self.oneIndex
        acc = one
        k = 1
        while acc != 0:
            acc = self.add(acc, one)
            k += 1
            if k > self._order:
                raise InvalidParameterError(f"{self.describe()}: additive order of 1 exceeds the ring order")
        return k

    def indices(self) -> range:
        return range(self._order)

    def element(self, index: int) -> "Element":
        """Wrap index as an Element of this ring."""
        if not 0 <= index < self._order:
            raise InvalidParameterError(f"index {index} outside [0, {self._order}) for {self.describe()}")
        return Element(self, index)

    @property
    def zero(self) -> "Element":
        return Element(self, 0)

    @property
    def one(self) -> "Element":
        return Element(self, self.oneIndex)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FiniteRing):
            return NotImplemented
        return self is other or self.signature() == other.signature()

    def __hash__(self) -> int:
        return hash(self.signature())

    def __repr__(self) -> str:
        return f"{type(self).__name__}({self.describe()}, order={self._order})"

    def __str__(self) -> str:
        return self.describe()


@dataclass(frozen=True)
class Element:
    """An element of a specific FiniteRing, identified by its canonical index."""
    ring: FiniteRing
    index: int

    def sameRing(self, other: "Element") -> "Element":
        if not isinstance(other, Element):
            raise RingMismatchError(f"expected an element of {self.ring}, got {type(other).__name__}")
        if other.ring != self.ring:
            raise RingMismatchError(f"cannot combine elements of {self.ring} and {other.ring}")
        return other

    def __add__(self, other: "Element") -> "Element":
        other = self.sameRing(other)
        return Element(self.ring, self.ring.add(self.index, other.index))

    def __sub__(self, other: "Element") -> "Element":
        other = self.sameRing(other)
        return Element(self.ring, self.ring.sub(self.index, other.index))

    def __neg__(self) -> "Element":
        return Element(self.ring, self.ring.neg(self.index))

    def __mul__(self, other) -> "Element":
        if isinstance(other, int) and not isinstance(other, bool):
            return Element(self.ring, self.ring.intMul(other, self.index))
        other = self.sameRing(other)
        return Element(self.ring, self.ring.mul(self.index, other.index))

    def __rmul__(self, other) -> "Element":
        if isinstance(other, int) and not isinstance(other, bool):
            return Element(self.ring, self.ring.intMul(other, self.index))
        return NotImplemented

    def __pow__(self, exponent: int) -> "Element":
        return Element(self.ring, self.ring.power(self.index, exponent))

    def isZero(self) -> bool:
        return self.index == 0

    def __str__(self) -> str:
        return self.ring.formatElement(self.index)


def sameRingOrRaise(*elements: Element) -> FiniteRing:
    """Return the common ring of the elements, or raise RingMismatchError."""
    if not elements:
        raise InvalidParameterError("no elements given")
    first = elements[0]
    for other in elements[1:]:
        first.sameRing(other)
    return first.ring


def indexTuple(elements: Tuple[Element, ...]) -> Tuple[int, ...]:
    return tuple(e.index for e in elements)


def elementIterator(ring: FiniteRing) -> Iterator[Element]:
    for i in ring.indices():
        yield Element(ring, i)


__all__ = [
    "RingFamily",
    "FiniteRing",
    "Element",
    "sameRingOrRaise",
    "indexTuple",
    "elementIterator",
]
