#!/usr/bin/env python3
"""
Uniform arithmetic dispatch, element enumeration and ring-axiom checks.
"""

from dataclasses import dataclass
from enum import Enum
from typing import Iterator, Optional, Tuple

from pringkit.core.errors import InvalidParameterError, RingMismatchError
from pringkit.core.settings import requireWithinGuard
from pringkit.rings.finiteRing import Element, FiniteRing, elementIterator


class ArithOp(Enum):
    """Operations understood by ringArith."""
    add = "add"
    mul = "mul"
    neg = "neg"
    pow = "pow"
    intMul = "int_mul"


def _member(ring: FiniteRing, value) -> Element:
    if not isinstance(value, Element):
        raise InvalidParameterError(f"expected an Element of {ring}, got {type(value).__name__}")
    if value.ring != ring:
        raise RingMismatchError(f"element of {value.ring} used in {ring}")
    return value


def ringArith(ring: FiniteRing, op: ArithOp, *args) -> Element:
    """
    Apply one arithmetic operation in `ring`.

    Args:
        ring: The ring all Element arguments must belong to
        op: add(x, y), mul(x, y), neg(x), pow(x, e) or intMul(k, x)

    Raises:
        RingMismatchError: If an Element belongs to another ring
        InvalidParameterError: On a wrong argument count or a negative exponent
    """
    op = ArithOp(op)
    arity = {ArithOp.add: 2, ArithOp.mul: 2, ArithOp.neg: 1, ArithOp.pow: 2, ArithOp.intMul: 2}[op]
    if len(args) != arity:
        raise InvalidParameterError(f"{op.value} takes {arity} arguments, got {len(args)}")

    if op is ArithOp.add:
        x, y = _member(ring, args[0]), _member(ring, args[1])
        return Element(ring, ring.add(x.index, y.index))
    if op is ArithOp.mul:
        x, y = _member(ring, args[0]), _member(ring, args[1])
        return Element(ring, ring.mul(x.index, y.index))
    if op is ArithOp.neg:
        x = _member(ring, args[0])
        return Element(ring, ring.neg(x.index))
    if op is ArithOp.pow:
        x, exponent = _member(ring, args[0]), args[1]
        return Element(ring, ring.power(x.index, int(exponent)))
    k, x = args[0], _member(ring, args[1])
    return Element(ring, ring.intMul(int(k), x.index))


def enumerateElements(ring: FiniteRing, guard: Optional[int] = None) -> Iterator[Element]:
    """
    Yield every element of the ring in ascending index order.

    Raises:
        SizeGuardError: If the ring exceeds the size guard
    """
    requireWithinGuard(ring.order, guard)
    return elementIterator(ring)


@dataclass(frozen=True)
class AxiomViolation:
    """First failing ring law and the elements that break it."""
    law: str
    witness: Tuple[int, ...]


def verifyRingAxioms(ring: FiniteRing, full: bool = False, guard: Optional[int] = None) -> Optional[AxiomViolation]:
    """
    Check the commutative-ring-with-identity laws exhaustively.

    Pairwise laws (closure, commutativity, neutral elements, inverses) are
    always checked over every pair including x = y; triple laws
    (associativity, distributivity) only when `full`.

    Returns:
        None if every law holds, otherwise the first violation found
    """
    requireWithinGuard(ring.order, guard)
    one = ring.oneIndex
    if one == 0:
        return AxiomViolation("identity distinct from zero", (0,))

    for x in ring.indices():
        if ring.add(x, 0) != x:
            return AxiomViolation("zero is additive identity", (x,))
        if ring.mul(x, one) != x:
            return AxiomViolation("one is multiplicative identity", (x,))
        if ring.add(x, ring.neg(x)) != 0:
            return AxiomViolation("additive inverse", (x,))
        for y in range(x, ring.order):
            xPlusY, xy = ring.add(x, y), ring.mul(x, y)
            if not 0 <= xPlusY < ring.order:
                return AxiomViolation("closure of addition", (x, y))
            if not 0 <= xy < ring.order:
                return AxiomViolation("closure of multiplication", (x, y))
            if xPlusY != ring.add(y, x):
                return AxiomViolation("commutativity of addition", (x, y))
            if xy != ring.mul(y, x):
                return AxiomViolation("commutativity of multiplication", (x, y))

    if not full:
        return None

    for x in ring.indices():
        for y in ring.indices():
            xy = ring.mul(x, y)
            xPlusY = ring.add(x, y)
            for z in ring.indices():
                if ring.add(xPlusY, z) != ring.add(x, ring.add(y, z)):
                    return AxiomViolation("associativity of addition", (x, y, z))
                if ring.mul(xy, z) != ring.mul(x, ring.mul(y, z)):
                    return AxiomViolation("associativity of multiplication", (x, y, z))
                if ring.mul(x, ring.add(y, z)) != ring.add(xy, ring.mul(x, z)):
                    return AxiomViolation("distributivity", (x, y, z))
    return None


def isExactCharacteristic(ring: FiniteRing, char: int) -> bool:
    """char·1 = 0 and k·1 ≠ 0 for 0 < k < char."""
    one = ring.oneIndex
    acc = 0
    for _ in range(1, char):
        acc = ring.add(acc, one)
        if acc == 0:
            return False
    return ring.add(acc, one) == 0


__all__ = [
    "ArithOp",
    "ringArith",
    "enumerateElements",
    "AxiomViolation",
    "verifyRingAxioms",
    "isExactCharacteristic",
]
