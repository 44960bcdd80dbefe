#!/usr/bin/env python3
"""
Decomposition of a finite p-ring R as F_p^n.

mccoyDecompose finds the maximal ideals with the ideal-lattice oracle and
verifies the Chinese-remainder map onto F_p^n. productDecomposition reads
the decomposition off an explicit product of prime fields without
enumerating anything, so it works far above the oracle guard.
"""

import time
from dataclasses import dataclass, field
from typing import List, Optional, Tuple

from pringkit.core.errors import InternalInconsistencyError, PreconditionError
from pringkit.core.logging import printVerbose
from pringkit.core.numberTheory import requirePrime
from pringkit.core.settings import getSettings, requireWithinOracleGuard
from pringkit.decision.ideals import IdealDesc, enumerateIdealsOracle, maximalIdeals
from pringkit.decision.oracles import isPIdeal, isPRingOracle
from pringkit.decision.report import Method
from pringkit.rings.finiteRing import FiniteRing
from pringkit.rings.homomorphism import ComponentProjection, RingHom, TableHom, identityHom, makeHom
from pringkit.rings.product import ProductRing, makeProduct
from pringkit.rings.zmod import isPrimeFieldLike, makePrimeField


@dataclass
class McCoyDecomposition:
    """R ≅ F_p^n together with the evidence."""
    ring: FiniteRing
    p: int
    n: int
    projections: Tuple[RingHom, ...]
    # CRT map R → F_p^n; None when R is literally a product of prime fields
    iso: Optional[TableHom]
    idealCount: int
    orderCheck: bool
    method: Method
    maximalIdeals: List[IdealDesc] = field(default_factory=list)
    elapsedSeconds: float = 0.0

    def toData(self) -> dict:
        return {
            "n": self.n,
            "order": self.ring.order,
            "orderIsPPowerN": self.orderCheck,
            "idealCount": self.idealCount,
            "method": self.method.value,
            "maximalIdeals": [m.describe() for m in self.maximalIdeals],
            "projections": [repr(proj) for proj in self.projections],
        }


def isPrimeFieldPowerOf(ring: FiniteRing, p: int) -> bool:
    """True if the ring is F_p, or an explicit product whose factors are all F_p."""
    if isinstance(ring, ProductRing):
        return all(isPrimeFieldLike(f) and f.order == p for f in ring.factors)
    return isPrimeFieldLike(ring) and ring.order == p


def productDecomposition(ring: FiniteRing, p: int, countIdeals: bool = False) -> McCoyDecomposition:
    """
    Structural decomposition of F_p or F_p × ... × F_p by coordinate projections.

    Args:
        ring: An explicit power of F_p
        p: Prime
        countIdeals: Enumerate the ideal lattice and check it has 2^n members
            when the ring fits the oracle guard

    Raises:
        PreconditionError: If the ring is not an explicit power of F_p
        InternalInconsistencyError: If the counted lattice does not have 2^n members
    """
    requirePrime(p)
    if not isPrimeFieldPowerOf(ring, p):
        raise PreconditionError(f"{ring} is not an explicit product of copies of GF({p})")
    if isinstance(ring, ProductRing):
        projections = tuple(ComponentProjection(ring, k) for k in range(len(ring.factors)))
    else:
        projections = (identityHom(ring),)
    n = len(projections)
    idealCount = 2 ** n
    if countIdeals and ring.order <= getSettings().oracleGuard:
        idealCount = len(enumerateIdealsOracle(ring))
        if idealCount != 2 ** n:
            raise InternalInconsistencyError(f"{ring}: {idealCount} ideals, expected 2^{n}")
    return McCoyDecomposition(ring, p, n, projections, None, idealCount, ring.order == p ** n, Method.theorem)


def residueProjection(ring: FiniteRing, maximal: IdealDesc, p: int) -> TableHom:
    """
    The verified map R → R/m ≅ F_p, x ↦ the c in [0, p) with x - c·1 ∈ m.

    Raises:
        InternalInconsistencyError: If R/m does not have exactly p elements
    """
    if ring.order != p * maximal.order:
        raise InternalInconsistencyError(f"R/m has {ring.order // maximal.order} elements, expected {p}")
    field = makePrimeField(p)
    members = frozenset(maximal.elements())
    multiplesOfOne = [ring.fromInteger(c) for c in range(p)]
    table = []
    for x in ring.indices():
        residue = next((c for c, cOne in enumerate(multiplesOfOne) if ring.sub(x, cOne) in members), None)
        if residue is None:
            raise InternalInconsistencyError(f"element {x} is not congruent to an integer mod {maximal}")
        table.append(residue)
    return makeHom(ring, field, table)


def mccoyDecompose(ring: FiniteRing, p: int, guard: Optional[int] = None) -> McCoyDecomposition:
    """
    Decompose a p-ring as F_p^n through its maximal ideals.

    Verifies that every R/m_k has p elements, the CRT map is a bijective
    ring homomorphism, |R| = p^n, and the ideal lattice has exactly 2^n
    members, all of them p-ideals.

    Raises:
        PreconditionError: If R is not a p-ring
        SizeGuardError: If R exceeds the oracle guard
        InternalInconsistencyError: If any of the verifications fails
    """
    requirePrime(p)
    requireWithinOracleGuard(ring.order, guard, what=f"McCoy decomposition of {ring}")
    start = time.perf_counter()
    pRing = isPRingOracle(ring, p)
    if not pRing.verdict:
        raise PreconditionError(f"{ring} is not a {p}-ring: {pRing.detail} at element {pRing.witness}")

    ideals = enumerateIdealsOracle(ring, guard)
    indexP = [ideal for ideal in ideals if ideal.order * p == ring.order]
    maximal = maximalIdeals(ring, ideals)
    if sorted(m.elements() for m in maximal) != sorted(m.elements() for m in indexP):
        raise InternalInconsistencyError(f"{ring}: maximal ideals are not exactly the ideals of index {p}")

    projections = tuple(residueProjection(ring, m, p) for m in indexP)
    n = len(projections)
    target = makeProduct([makePrimeField(p)] * n)
    crtTable = [target.encode([proj.image(x) for proj in projections]) for x in ring.indices()]
    iso = makeHom(ring, target, crtTable)
    if not iso.isBijective():
        raise InternalInconsistencyError(f"{ring}: CRT map onto GF({p})^{n} is not bijective")

    orderCheck = ring.order == p ** n
    if not orderCheck:
        raise InternalInconsistencyError(f"{ring}: order {ring.order} ≠ {p}^{n}")
    if len(ideals) != 2 ** n:
        raise InternalInconsistencyError(f"{ring}: {len(ideals)} ideals, expected 2^{n}")
    for ideal in ideals:
        report = isPIdeal(ideal, p)
        if not report.verdict:
            raise InternalInconsistencyError(f"{ring}: ideal {ideal} is not a {p}-ideal (witness {report.witness})")

    elapsed = time.perf_counter() - start
    printVerbose(f"{ring} ≅ GF({p})^{n}: {len(ideals)} ideals verified in {elapsed:.3f}s")
    return McCoyDecomposition(ring, p, n, projections, iso, len(ideals), orderCheck, Method.oracle, indexP, elapsed)


def pRingProjections(ring: FiniteRing, p: int) -> McCoyDecomposition:
    """Structural decomposition when R is an explicit power of F_p, otherwise the oracle one."""
    if isPrimeFieldPowerOf(ring, p):
        return productDecomposition(ring, p)
    return mccoyDecompose(ring, p)


__all__ = [
    "McCoyDecomposition",
    "isPrimeFieldPowerOf",
    "productDecomposition",
    "residueProjection",
    "mccoyDecompose",
    "pRingProjections",
]
