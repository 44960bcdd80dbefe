#!/usr/bin/env python3
"""
Finite modules over a finite ring A, as direct sums of components.

A cyclic component is the group Z/m with the action a·x = x·t(a), where
t: A → Z/m is a verified action table. A regular component is A acting on
itself by multiplication. Module elements are mixed-radix encoded over the
components, first component least significant.
"""

from dataclasses import dataclass, field
from typing import Hashable, List, Sequence, Tuple, Union

from pringkit.core.errors import InvalidParameterError, ModuleActionError
from pringkit.core.settings import requireWithinOracleGuard
from pringkit.rings.finiteRing import FiniteRing
from pringkit.rings.homomorphism import loadHomTable


@dataclass(frozen=True)
class CyclicComponent:
    """Z/m with action a·x = x·actionTable[a]."""
    modulus: int
    actionTable: Tuple[int, ...]

    @property
    def order(self) -> int:
        return self.modulus

    def add(self, x: int, y: int) -> int:
        return (x + y) % self.modulus

    def neg(self, x: int) -> int:
        return (-x) % self.modulus

    def act(self, a: int, x: int) -> int:
        return (x * self.actionTable[a]) % self.modulus

    def describe(self) -> str:
        return f"Z/{self.modulus}"


@dataclass(frozen=True)
class RegularComponent:
    """A acting on itself."""
    base: FiniteRing = field(compare=False)

    @property
    def order(self) -> int:
        return self.base.order

    def add(self, x: int, y: int) -> int:
        return self.base.add(x, y)

    def neg(self, x: int) -> int:
        return self.base.neg(x)

    def act(self, a: int, x: int) -> int:
        return self.base.mul(a, x)

    def describe(self) -> str:
        return "A"


Component = Union[CyclicComponent, RegularComponent]


class ModuleDesc:
    """A finite A-module E = C_1 ⊕ ... ⊕ C_k."""

    def __init__(self, base: FiniteRing, components: Sequence[Component]):
        self.base = base
        self.components: Tuple[Component, ...] = tuple(components)
        self.radices = tuple(c.order for c in self.components)
        order = 1
        for radix in self.radices:
            order *= radix
        self.order = order

    def decode(self, index: int) -> Tuple[int, ...]:
        parts = []
        for radix in self.radices:
            index, digit = divmod(index, radix)
            parts.append(digit)
        return tuple(parts)

    def encode(self, parts: Sequence[int]) -> int:
        index = 0
        weight = 1
        for part, radix in zip(parts, self.radices):
            index += part * weight
            weight *= radix
        return index

    def add(self, e: int, f: int) -> int:
        return self.encode([c.add(x, y) for c, x, y in zip(self.components, self.decode(e), self.decode(f))])

    def neg(self, e: int) -> int:
        return self.encode([c.neg(x) for c, x in zip(self.components, self.decode(e))])

    def act(self, a: int, e: int) -> int:
        """Index of a·e."""
        return self.encode([c.act(a, x) for c, x in zip(self.components, self.decode(e))])

    def isZero(self) -> bool:
        """True for the zero module."""
        return self.order == 1

    def describe(self) -> str:
        if not self.components:
            return "0"
        return " ⊕ ".join(c.describe() for c in self.components)

    def signature(self) -> Hashable:
        parts = []
        for c in self.components:
            if isinstance(c, RegularComponent):
                parts.append(("regular",))
            else:
                parts.append(("cyclic", c.modulus, c.actionTable))
        return (self.base.signature(), tuple(parts))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ModuleDesc):
            return NotImplemented
        return self.signature() == other.signature()

    def __hash__(self) -> int:
        return hash(self.signature())

    def __repr__(self) -> str:
        return f"ModuleDesc({self.base}, {self.describe()})"


def zeroModule(base: FiniteRing) -> ModuleDesc:
    return ModuleDesc(base, [])


def freeModule(base: FiniteRing, rank: int) -> ModuleDesc:
    """
    A^rank.

    Raises:
        InvalidParameterError: If rank is negative
    """
    if rank < 0:
        raise InvalidParameterError(f"rank must be non-negative, got {rank}")
    return ModuleDesc(base, [RegularComponent(base)] * rank)


def verifyActionTable(base: FiniteRing, modulus: int, actionTable: Sequence[int]) -> None:
    """
    Check the module laws for the action a·x = x·t(a) on Z/m.

    Distributivity over Z/m holds by construction; the remaining laws say
    t(a+b) = t(a)+t(b), t(ab) = t(a)t(b) and t(1) = 1 in Z/m.

    Raises:
        ModuleActionError: Naming the failing law and its witness
    """
    if len(actionTable) != base.order:
        raise ModuleActionError(f"action table has {len(actionTable)} entries, {base} has {base.order} elements")
    table = [t % modulus for t in actionTable]
    if table[base.oneIndex] != 1 % modulus:
        raise ModuleActionError("1·x = x fails", witness=[base.oneIndex])
    requireWithinOracleGuard(base.order, what="action table base")
    for a in base.indices():
        for b in range(a, base.order):
            if table[base.add(a, b)] != (table[a] + table[b]) % modulus:
                raise ModuleActionError("(a+b)·x = a·x + b·x fails", witness=[a, b])
            if table[base.mul(a, b)] != (table[a] * table[b]) % modulus:
                raise ModuleActionError("(ab)·x = a·(b·x) fails", witness=[a, b])


def cyclicModule(base: FiniteRing, modulus: int, actionTable: Sequence[int]) -> ModuleDesc:
    """
    Z/m as an A-module through a verified action table.

    Raises:
        InvalidParameterError: If modulus < 2
        ModuleActionError: If the table violates a module law
    """
    if modulus < 2:
        raise InvalidParameterError(f"cyclic component needs m ≥ 2, got {modulus}")
    verifyActionTable(base, modulus, actionTable)
    return ModuleDesc(base, [CyclicComponent(modulus, tuple(t % modulus for t in actionTable))])


def loadActionTable(path: str, baseOrder: int) -> List[int]:
    """Read an action table file: one `a -> a·1` line per element index a of the base ring."""
    return loadHomTable(path, baseOrder)


__all__ = [
    "CyclicComponent",
    "RegularComponent",
    "ModuleDesc",
    "zeroModule",
    "freeModule",
    "verifyActionTable",
    "cyclicModule",
    "loadActionTable",
]
