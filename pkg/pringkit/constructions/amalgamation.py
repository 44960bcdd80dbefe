#!/usr/bin/env python3
"""
Amalgamation A ⋈^f J = {(a, f(a) + j) : a ∈ A, j ∈ J} of A with B along J.

Element index = (index of a) + |A|·(position of j in the sorted elements
of J), so the A-part is the least significant digit. The homomorphism f
may be non-unital; the identity condition f(1)·(f(a)+j) = f(a)+j makes
(1_A, f(1_A)) the identity of the amalgamation regardless.
"""

from dataclasses import dataclass
from functools import cached_property
from typing import Any, Dict, Hashable, Optional, Tuple

from pringkit.core.errors import IdentityConditionError, InternalInconsistencyError, InvalidParameterError
from pringkit.core.logging import printVerbose
from pringkit.core.settings import requireWithinGuard
from pringkit.decision.ideals import IdealDesc, IdealForm, checkIdealClosure, zmodIdeal
from pringkit.rings.arithmetic import verifyRingAxioms
from pringkit.rings.finiteRing import FiniteRing, RingFamily
from pringkit.rings.homomorphism import RingHom, TableHom, identityHom, makeHom, scaleFirstHom
from pringkit.rings.product import makeFunctionRing
from pringkit.rings.zmod import makePrimeField, makeZmod


@dataclass(frozen=True)
class AmalgDesc:
    """The data A, B, f: A → B and an ideal J of B."""
    a: FiniteRing
    b: FiniteRing
    hom: RingHom
    ideal: IdealDesc

    @cached_property
    def idealElements(self) -> Tuple[int, ...]:
        return self.ideal.elements()

    def image(self, a: int, j: int) -> int:
        """Index in B of f(a) + j."""
        return self.b.add(self.hom.image(a), j)

    def verify(self) -> None:
        """
        Check that the pieces fit and that the identity condition holds.

        Raises:
            InvalidParameterError: If hom or ideal live on the wrong rings
            IdealInvalidError: If J is not an ideal of B
            IdentityConditionError: With the first failing pair (a, j)
        """
        if self.hom.source != self.a or self.hom.target != self.b:
            raise InvalidParameterError(f"homomorphism {self.hom.source} -> {self.hom.target} does not map {self.a} to {self.b}")
        if self.ideal.ring != self.b:
            raise InvalidParameterError(f"ideal of {self.ideal.ring} given, need an ideal of {self.b}")
        if self.ideal.form is IdealForm.extensional:
            checkIdealClosure(self.b, self.idealElements)
        oneImage = self.hom.image(self.a.oneIndex)
        for a in self.a.indices():
            for j in self.idealElements:
                value = self.image(a, j)
                if self.b.mul(oneImage, value) != value:
                    raise IdentityConditionError(f"f(1)·(f(a)+j) ≠ f(a)+j at a={a}, j={j}", witness=[a, j])

    def describe(self) -> str:
        return f"amalg({self.a}, {self.b}, {self.hom!r}, {self.ideal})"


class AmalgamationRing(FiniteRing):
    """A ⋈^f J."""

    family = RingFamily.amalgamation

    def __init__(self, desc: AmalgDesc):
        self.desc = desc
        self.idealElements = desc.idealElements
        self._positions = {j: k for k, j in enumerate(self.idealElements)}
        super().__init__(desc.a.order * len(self.idealElements))

    def pair(self, index: int) -> Tuple[int, int]:
        """(a, j) indices of an element."""
        position, a = divmod(index, self.desc.a.order)
        return a, self.idealElements[position]

    def encodePair(self, a: int, j: int) -> int:
        position = self._positions.get(j)
        if position is None:
            raise InternalInconsistencyError(f"{j} left the ideal {self.desc.ideal}")
        return a + self.desc.a.order * position

    def bPart(self, index: int) -> int:
        """Index in B of the second coordinate f(a) + j."""
        a, j = self.pair(index)
        return self.desc.image(a, j)

    @property
    def oneIndex(self) -> int:
        return self.encodePair(self.desc.a.oneIndex, 0)

    def add(self, i: int, k: int) -> int:
        a, j = self.pair(i)
        b, l = self.pair(k)
        return self.encodePair(self.desc.a.add(a, b), self.desc.b.add(j, l))

    def neg(self, i: int) -> int:
        a, j = self.pair(i)
        return self.encodePair(self.desc.a.neg(a), self.desc.b.neg(j))

    def mul(self, i: int, k: int) -> int:
        A, B, hom = self.desc.a, self.desc.b, self.desc.hom
        a, _ = self.pair(i)
        b, _ = self.pair(k)
        ab = A.mul(a, b)
        second = B.mul(self.bPart(i), self.bPart(k))
        return self.encodePair(ab, B.sub(second, hom.image(ab)))

    @property
    def params(self) -> Dict[str, Any]:
        return {
            "A": self.desc.a.describe(),
            "B": self.desc.b.describe(),
            "hom": list(self.desc.hom.table()),
            "J": list(self.idealElements),
        }

    def describe(self) -> str:
        return self.desc.describe()

    def signature(self) -> Hashable:
        return (self.family.value, self.desc.a.signature(), self.desc.b.signature(), self.desc.hom.table(), self.idealElements)

    def formatElement(self, i: int) -> str:
        a, _ = self.pair(i)
        return f"({self.desc.a.formatElement(a)},{self.desc.b.formatElement(self.bPart(i))})"


def makeAmalgamation(desc: AmalgDesc, guard: Optional[int] = None) -> AmalgamationRing:
    """
    Build A ⋈^f J after verifying the description.

    Raises:
        IdealInvalidError: If J is not an ideal of B
        IdentityConditionError: If f(1)·(f(a)+j) ≠ f(a)+j for some a, j
        SizeGuardError: If |A|·|J| exceeds the size guard
    """
    requireWithinGuard(desc.a.order * desc.ideal.order, guard, what="amalgamation")
    desc.verify()
    ring = AmalgamationRing(desc)
    violation = verifyRingAxioms(ring, guard=guard)
    if violation is not None:
        raise InternalInconsistencyError(f"{ring}: {violation.law} fails at {violation.witness}")
    printVerbose(f"Verified closure and identity of {ring} over {ring.order} elements")
    return ring


def makeDuplication(ring: FiniteRing, ideal: IdealDesc, guard: Optional[int] = None) -> AmalgamationRing:
    """A ⋈ I, the amalgamation of A with itself along I by the identity."""
    return makeAmalgamation(AmalgDesc(ring, ring, identityHom(ring), ideal), guard)


def amalgamationProjection(ring: AmalgamationRing) -> TableHom:
    """The verified surjection (a, f(a)+j) ↦ a."""
    table = [ring.pair(i)[0] for i in ring.indices()]
    return makeHom(ring, ring.desc.a, table)


def makeScaledAmalgamationExample(p: int, m: int) -> AmalgDesc:
    """
    A = F_p^m, B = Z/p(p+1)Z, f(a) = (p+1)·a₀ and J = (p+1)B.

    The homomorphism is not unital; f(1) = p+1 is idempotent in B.
    """
    field = makePrimeField(p)
    a = makeFunctionRing(field, m)
    b = makeZmod(p * (p + 1))
    hom = scaleFirstHom(a, b, p + 1)
    return AmalgDesc(a, b, hom, zmodIdeal(b, p + 1))


__all__ = [
    "AmalgDesc",
    "AmalgamationRing",
    "makeAmalgamation",
    "makeDuplication",
    "amalgamationProjection",
    "makeScaledAmalgamationExample",
]
