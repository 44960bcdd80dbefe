#!/usr/bin/env python3
"""
Finite direct products R_1 × ... × R_k.

Element index is the mixed-radix encoding of the component indices, the
first factor being the least significant digit.
"""

from typing import Any, Dict, Hashable, List, Sequence, Tuple

from pringkit.core.errors import InvalidParameterError
from pringkit.core.numberTheory import lcm
from pringkit.rings.finiteRing import FiniteRing, RingFamily
from pringkit.rings.zmod import isPrimeFieldLike


class ProductRing(FiniteRing):
    """Direct product of finitely many finite rings."""

    family = RingFamily.product

    def __init__(self, factors: Sequence[FiniteRing]):
        if not factors:
            raise InvalidParameterError("a product needs at least one factor")
        self.factors: Tuple[FiniteRing, ...] = tuple(factors)
        self.radices: Tuple[int, ...] = tuple(f.order for f in self.factors)
        weights = []
        weight = 1
        for radix in self.radices:
            weights.append(weight)
            weight *= radix
        self.weights: Tuple[int, ...] = tuple(weights)
        super().__init__(weight)
        self._oneIndex = self.encode([f.oneIndex for f in self.factors])

    def encode(self, components: Sequence[int]) -> int:
        """Mixed-radix index of a tuple of component indices."""
        if len(components) != len(self.factors):
            raise InvalidParameterError(
                f"expected {len(self.factors)} components, got {len(components)}"
            )
        index = 0
        for component, radix, weight in zip(components, self.radices, self.weights):
            if not 0 <= component < radix:
                raise InvalidParameterError(f"component {component} outside [0, {radix})")
            index += component * weight
        return index

    def decode(self, index: int) -> Tuple[int, ...]:
        """Component indices of the element with the given index."""
        components = []
        for radix in self.radices:
            index, digit = divmod(index, radix)
            components.append(digit)
        return tuple(components)

    def component(self, index: int, position: int) -> int:
        """Index of one component without decoding the rest."""
        return (index // self.weights[position]) % self.radices[position]

    @property
    def oneIndex(self) -> int:
        return self._oneIndex

    def add(self, i: int, j: int) -> int:
        a, b = self.decode(i), self.decode(j)
        return self.encode([f.add(x, y) for f, x, y in zip(self.factors, a, b)])

    def neg(self, i: int) -> int:
        return self.encode([f.neg(x) for f, x in zip(self.factors, self.decode(i))])

    def mul(self, i: int, j: int) -> int:
        a, b = self.decode(i), self.decode(j)
        return self.encode([f.mul(x, y) for f, x, y in zip(self.factors, a, b)])

    def power(self, i: int, exponent: int) -> int:
        if exponent < 0:
            raise InvalidParameterError(f"exponent must be non-negative, got {exponent}")
        return self.encode([f.power(x, exponent) for f, x in zip(self.factors, self.decode(i))])

    @property
    def characteristic(self) -> int:
        return lcm(f.characteristic for f in self.factors)

    @property
    def params(self) -> Dict[str, Any]:
        return {"factors": [f.describe() for f in self.factors]}

    def describe(self) -> str:
        parts = []
        for f in self.factors:
            text = f.describe()
            parts.append(f"({text})" if isinstance(f, ProductRing) else text)
        return "*".join(parts)

    def signature(self) -> Hashable:
        return (self.family.value, tuple(f.signature() for f in self.factors))

    def formatElement(self, i: int) -> str:
        inner = ",".join(f.formatElement(x) for f, x in zip(self.factors, self.decode(i)))
        return f"({inner})"

    def isPrimeFieldPower(self) -> bool:
        """True if every factor is a prime field of the same characteristic."""
        first = self.factors[0]
        return all(isPrimeFieldLike(f) and f.order == first.order for f in self.factors)


def makeProduct(factors: List[FiniteRing]) -> ProductRing:
    """
    Build the product ring of the given factors.

    Raises:
        InvalidParameterError: If the list is empty
    """
    return ProductRing(factors)


def makeFunctionRing(ring: FiniteRing, size: int) -> ProductRing:
    """
    Ring of all functions from a set of `size` points into `ring`, i.e. ring^size.

    Raises:
        InvalidParameterError: If size < 1
    """
    if size < 1:
        raise InvalidParameterError(f"the domain of a function ring must be non-empty, got size {size}")
    return ProductRing([ring] * size)


__all__ = [
    "ProductRing",
    "makeProduct",
    "makeFunctionRing",
]
