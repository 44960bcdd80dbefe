#!/usr/bin/env python3
"""
Ideals of finite rings and the ideal-lattice oracle.

An IdealDesc is either structural (kZ/nZ, (g)/(f) in F_p[x]/(f), or a
product of ideals of the factors) or extensional (a sorted element list).
Structural ideals answer membership and order without being expanded, so
they work in rings above the size guard.
"""

from dataclasses import dataclass, field
from enum import Enum
from functools import cached_property
from math import gcd
from typing import FrozenSet, Iterable, List, Optional, Sequence, Set, Tuple, Union

from pringkit.core.errors import IdealInvalidError, InvalidParameterError
from pringkit.core.logging import printVerbose
from pringkit.core.settings import requireWithinGuard, requireWithinOracleGuard
from pringkit.constructions.quotient import QuotientRing
from pringkit.poly.algorithms import polyGcd
from pringkit.poly.fpPoly import FpPoly
from pringkit.rings.finiteRing import FiniteRing
from pringkit.rings.product import ProductRing
from pringkit.rings.zmod import ZmodRing


class IdealForm(Enum):
    """How an IdealDesc is represented."""
    zmod = "zmod"
    quotient = "quotient"
    product = "product"
    extensional = "extensional"


@dataclass(frozen=True, eq=False)
class IdealDesc:
    """An ideal of a finite ring."""
    ring: FiniteRing
    form: IdealForm
    # k for kZ/nZ (with k | n), monic g | f for (g)/(f), per-factor ideals for products
    generator: Union[int, FpPoly, Tuple["IdealDesc", ...], None] = None
    elementSet: Optional[Tuple[int, ...]] = field(default=None, repr=False)

    @property
    def order(self) -> int:
        if self.form is IdealForm.zmod:
            return self.ring.modulus // self.generator
        if self.form is IdealForm.quotient:
            return self.ring.p ** (self.ring.degree - int(self.generator.degree))
        if self.form is IdealForm.product:
            order = 1
            for part in self.generator:
                order *= part.order
            return order
        return len(self.elementSet)

    def contains(self, index: int) -> bool:
        if self.form is IdealForm.zmod:
            return index % self.generator == 0
        if self.form is IdealForm.quotient:
            return self.generator.divides(self.ring.decodePoly(index))
        if self.form is IdealForm.product:
            components = self.ring.decode(index)
            return all(part.contains(c) for part, c in zip(self.generator, components))
        return index in self._members

    @cached_property
    def _members(self) -> FrozenSet[int]:
        return frozenset(self.elements())

    def elements(self) -> Tuple[int, ...]:
        """
        Sorted element indices.

        Raises:
            SizeGuardError: If a structural ideal is too large to expand
        """
        if self.elementSet is not None:
            return self.elementSet
        requireWithinGuard(self.order, what=f"ideal {self.describe()}")
        if self.form is IdealForm.zmod:
            return tuple(range(0, self.ring.modulus, self.generator))
        if self.form is IdealForm.product:
            expanded = [0]
            for part, weight in zip(self.generator, self.ring.weights):
                expanded = [base + c * weight for c in part.elements() for base in expanded]
            return tuple(sorted(expanded))
        requireWithinGuard(self.ring.order, what=str(self.ring))
        return tuple(i for i in self.ring.indices() if self.contains(i))

    def isZero(self) -> bool:
        return self.order == 1

    def isUnit(self) -> bool:
        return self.order == self.ring.order

    def describe(self) -> str:
        if self.form is IdealForm.zmod:
            if self.generator == self.ring.modulus:
                return "(0)"
            return f"{self.generator}Z/{self.ring.modulus}Z"
        if self.form is IdealForm.quotient:
            return f"({self.generator})/({self.ring.modulus})"
        if self.form is IdealForm.product:
            return " × ".join(part.describe() for part in self.generator)
        return "{" + ",".join(str(i) for i in self.elementSet) + "}"

    def __str__(self) -> str:
        return self.describe()

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, IdealDesc):
            return NotImplemented
        if self.ring != other.ring or self.order != other.order:
            return False
        if self.form is IdealForm.zmod and other.form is IdealForm.zmod:
            return self.generator == other.generator
        return self.elements() == other.elements()

    def __hash__(self) -> int:
        return hash((self.ring, self.order))


def checkIdealClosure(ring: FiniteRing, elements: Iterable[int]) -> Tuple[int, ...]:
    """
    Verify that a set of element indices is an ideal.

    Returns:
        The sorted element indices

    Raises:
        IdealInvalidError: With the first failing element or pair
    """
    members: Set[int] = set()
    for i in elements:
        if not 0 <= i < ring.order:
            raise IdealInvalidError(f"index {i} outside [0, {ring.order})", witness=[i])
        members.add(i)
    if 0 not in members:
        raise IdealInvalidError("ideal does not contain 0", witness=[0])
    ordered = sorted(members)
    for x in ordered:
        for y in ordered:
            if y < x:
                continue
            if ring.add(x, y) not in members:
                raise IdealInvalidError(f"not closed under addition at ({x}, {y})", witness=[x, y])
        for r in ring.indices():
            if ring.mul(x, r) not in members:
                raise IdealInvalidError(f"does not absorb multiplication at ({x}, {r})", witness=[x, r])
    return tuple(ordered)


def extensionalIdeal(ring: FiniteRing, elements: Iterable[int]) -> IdealDesc:
    """
    Raises:
        IdealInvalidError: If the elements do not form an ideal
    """
    requireWithinGuard(ring.order)
    return IdealDesc(ring, IdealForm.extensional, None, checkIdealClosure(ring, elements))


def principalElements(ring: FiniteRing, x: int) -> FrozenSet[int]:
    return frozenset(ring.mul(x, r) for r in ring.indices())


def principalIdeal(ring: FiniteRing, x: int) -> IdealDesc:
    """xR."""
    requireWithinGuard(ring.order)
    if not 0 <= x < ring.order:
        raise InvalidParameterError(f"index {x} outside [0, {ring.order})")
    return IdealDesc(ring, IdealForm.extensional, None, tuple(sorted(principalElements(ring, x))))


def _sumElements(ring: FiniteRing, left: Sequence[int], right: Sequence[int]) -> FrozenSet[int]:
    # Union of cosets of `left`, one per element of `right` not yet covered
    total: Set[int] = set(left)
    for j in right:
        if j in total:
            continue
        total.update(ring.add(i, j) for i in left)
    return frozenset(total)


def idealSum(first: IdealDesc, second: IdealDesc) -> IdealDesc:
    """
    I + J.

    Raises:
        InvalidParameterError: If the ideals belong to different rings
    """
    if first.ring != second.ring:
        raise InvalidParameterError(f"ideals of {first.ring} and {second.ring}")
    ring = first.ring
    if first.form is IdealForm.zmod and second.form is IdealForm.zmod:
        return zmodIdeal(ring, gcd(first.generator, second.generator))
    return IdealDesc(ring, IdealForm.extensional, None, tuple(sorted(_sumElements(ring, first.elements(), second.elements()))))


def generatedIdeal(ring: FiniteRing, generators: Sequence[int]) -> IdealDesc:
    """The ideal generated by the given element indices; the empty list gives (0)."""
    requireWithinGuard(ring.order)
    elements: FrozenSet[int] = frozenset([0])
    for x in generators:
        if not 0 <= x < ring.order:
            raise InvalidParameterError(f"generator index {x} outside [0, {ring.order})")
        if x in elements:
            continue
        elements = _sumElements(ring, sorted(elements), sorted(principalElements(ring, x)))
    return IdealDesc(ring, IdealForm.extensional, None, tuple(sorted(elements)))


def zeroIdeal(ring: FiniteRing) -> IdealDesc:
    if isinstance(ring, ZmodRing):
        return zmodIdeal(ring, 0)
    return IdealDesc(ring, IdealForm.extensional, None, (0,))


def unitIdeal(ring: FiniteRing) -> IdealDesc:
    if isinstance(ring, ZmodRing):
        return zmodIdeal(ring, 1)
    requireWithinGuard(ring.order)
    return IdealDesc(ring, IdealForm.extensional, None, tuple(ring.indices()))


def zmodIdeal(ring: ZmodRing, k: int) -> IdealDesc:
    """
    kZ/nZ, with k replaced by gcd(k, n) (so k = 0 gives the zero ideal).

    Raises:
        InvalidParameterError: If ring is not Z/nZ
    """
    if not isinstance(ring, ZmodRing):
        raise InvalidParameterError(f"{ring} is not a residue ring Z/nZ")
    return IdealDesc(ring, IdealForm.zmod, gcd(k, ring.modulus))


def quotientIdeal(ring: QuotientRing, g: FpPoly) -> IdealDesc:
    """
    (g)/(f) in F_p[x]/(f), with g replaced by the monic gcd(g, f).

    Raises:
        InvalidParameterError: If ring is not a quotient F_p[x]/(f)
    """
    if not isinstance(ring, QuotientRing):
        raise InvalidParameterError(f"{ring} is not a quotient F_p[x]/(f)")
    return IdealDesc(ring, IdealForm.quotient, polyGcd(g, ring.modulus))


def productIdeal(ring: ProductRing, parts: Sequence[IdealDesc]) -> IdealDesc:
    """
    I_1 × ... × I_k.

    Raises:
        InvalidParameterError: If the parts do not match the factors
    """
    if not isinstance(ring, ProductRing) or len(parts) != len(ring.factors):
        raise InvalidParameterError(f"need one ideal per factor of {ring}")
    for part, factor in zip(parts, ring.factors):
        if part.ring != factor:
            raise InvalidParameterError(f"ideal of {part.ring} given for factor {factor}")
    return IdealDesc(ring, IdealForm.product, tuple(parts))


def enumerateIdealsOracle(ring: FiniteRing, guard: Optional[int] = None) -> List[IdealDesc]:
    """
    Every ideal of the ring, by closing the principal ideals under sums.

    Each new ideal is summed with every principal ideal until no new ideal
    appears; every ideal of a finite ring is a finite sum of principal ideals.

    Returns:
        Extensional ideals sorted by (order, elements)

    Raises:
        SizeGuardError: If the ring exceeds the oracle guard
    """
    requireWithinOracleGuard(ring.order, guard, what=f"ideal lattice of {ring}")

    principals = {}
    for x in ring.indices():
        elements = principalElements(ring, x)
        principals.setdefault(elements, x)
    generatorsByIdeal = sorted(principals.items(), key=lambda item: item[1])

    seen: Set[FrozenSet[int]] = set(principals)
    worklist = list(principals)
    while worklist:
        current = worklist.pop()
        currentSorted = sorted(current)
        for principal, generator in generatorsByIdeal:
            if generator in current:
                continue
            combined = _sumElements(ring, currentSorted, sorted(principal))
            if combined not in seen:
                seen.add(combined)
                worklist.append(combined)

    ideals = [IdealDesc(ring, IdealForm.extensional, None, tuple(sorted(s))) for s in seen]
    ideals.sort(key=lambda ideal: (len(ideal.elementSet), ideal.elementSet))
    printVerbose(f"{ring}: {len(ideals)} ideals from {len(principals)} principal ideals")
    return ideals


def maximalIdeals(ring: FiniteRing, ideals: Sequence[IdealDesc]) -> List[IdealDesc]:
    """Proper ideals not strictly contained in another proper ideal of the list."""
    proper = [ideal for ideal in ideals if ideal.order < ring.order]
    sets = [frozenset(ideal.elements()) for ideal in proper]
    return [
        ideal for ideal, members in zip(proper, sets)
        if not any(members < other for other in sets)
    ]


__all__ = [
    "IdealForm",
    "IdealDesc",
    "checkIdealClosure",
    "extensionalIdeal",
    "principalIdeal",
    "idealSum",
    "generatedIdeal",
    "zeroIdeal",
    "unitIdeal",
    "zmodIdeal",
    "quotientIdeal",
    "productIdeal",
    "enumerateIdealsOracle",
    "maximalIdeals",
]
