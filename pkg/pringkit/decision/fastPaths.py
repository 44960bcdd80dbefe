#!/usr/bin/env python3
"""
Theorem-based decisions: each answers a p-ring or p-ideal question from
structural data (valuations, roots, reductions) without materializing the
ring it is about.
"""

import time
from dataclasses import dataclass
from enum import Enum
from typing import Dict, List, Optional, Sequence, Union

from pringkit.core.errors import (
    BaseMismatchError,
    InternalInconsistencyError,
    InvalidParameterError,
    ModulusMismatchError,
    PreconditionError,
)
from pringkit.core.numberTheory import pValuation, primeDivisors, requirePrime
from pringkit.core.settings import requireWithinGuard
from pringkit.constructions.amalgamation import AmalgDesc
from pringkit.constructions.modules import ModuleDesc
from pringkit.constructions.quotient import PolyOverRing, QuotientRing, decomposeQuotient
from pringkit.decision.ideals import IdealDesc, quotientIdeal, zmodIdeal
from pringkit.decision.mccoy import isPrimeFieldPowerOf, pRingProjections
from pringkit.decision.oracles import isPIdeal, isPRingOracle, isVnrOracle
from pringkit.decision.report import DecisionReport, theoremReport
from pringkit.decision.sweep import sweepForWitness
from pringkit.poly.algorithms import dividesXpMinusX, isIrreducible, requireNonConstant, rootsWithMultiplicity
from pringkit.poly.fpPoly import FpPoly
from pringkit.rings.finiteRing import FiniteRing
from pringkit.rings.homomorphism import RingHom
from pringkit.rings.zmod import makeZmod


class CheckMode(Enum):
    """Property decided by trivialExtCheck."""
    pring = "pring"
    vnr = "vnr"


def pIdealsOfZmod(n: int, p: int) -> List[IdealDesc]:
    """
    The p-ideals of Z/nZ: (0) and (n/p)Z/nZ when v_p(n) = 1, otherwise only (0).

    Raises:
        InvalidParameterError: If n < 2
        NotPrimeError: If p is not prime
    """
    requirePrime(p)
    ring = makeZmod(n)
    ideals = [zmodIdeal(ring, 0)]
    if pValuation(n, p) == 1:
        ideals.append(zmodIdeal(ring, n // p))
    return ideals


def pIdealTableOfZmod(n: int) -> Dict[int, List[IdealDesc]]:
    """pIdealsOfZmod(n, p) for every prime p dividing n."""
    makeZmod(n)
    return {p: pIdealsOfZmod(n, p) for p in primeDivisors(n)}


def _requireOver(p: int, f: FpPoly) -> FpPoly:
    requirePrime(p)
    requireNonConstant(f)
    if f.p != p:
        raise ModulusMismatchError(f"{f} lives over F_{f.p}, not F_{p}")
    return f


def quotientHasPIdeal(p: int, f: FpPoly) -> DecisionReport:
    """
    F_p[x]/(f) has a nonzero p-ideal iff f has a simple root in F_p.

    Raises:
        InvalidParameterError: If f is zero or constant
    """
    _requireOver(p, f)
    start = time.perf_counter()
    roots = rootsWithMultiplicity(f)
    simple = [a for a, multiplicity in roots if multiplicity == 1]
    rootText = ", ".join(f"{a} (×{m})" for a, m in roots) or "none"
    report = theoremReport(
        f"nonzero {p}-ideal",
        bool(simple),
        f"roots of {f} in GF({p}): {rootText}",
        elapsedSeconds=time.perf_counter() - start,
    )
    report.data = {"roots": [[a, m] for a, m in roots], "simpleRoots": simple}
    return report


def pIdealsOfQuotient(p: int, f: FpPoly) -> List[IdealDesc]:
    """
    The p-ideals of F_p[x]/(f): (f/h)/(f) for h any product of distinct x - a at simple roots a.

    Ordered by increasing size, starting with (0).
    """
    _requireOver(p, f)
    ring = QuotientRing(p, f.monic())
    simple = [a for a, multiplicity in rootsWithMultiplicity(f) if multiplicity == 1]
    ideals = []
    for mask in range(2 ** len(simple)):
        h = FpPoly.constant(p, 1)
        for bit, a in enumerate(simple):
            if mask >> bit & 1:
                h = h * FpPoly.linear(p, a)
        ideals.append(quotientIdeal(ring, ring.modulus // h))
    ideals.sort(key=lambda ideal: (ideal.order, ideal.generator.sortKey()))
    return ideals


def _requirePRing(ring: FiniteRing, p: int) -> None:
    if isPrimeFieldPowerOf(ring, p):
        return
    report = isPRingOracle(ring, p)
    if not report.verdict:
        raise PreconditionError(f"{ring} is not a {p}-ring: {report.detail} at element {report.witness}")


def pringPolyQuotientIsPRing(
    ring: FiniteRing,
    f: PolyOverRing,
    p: int,
    projections: Optional[Sequence[RingHom]] = None,
) -> DecisionReport:
    """
    R[x]/(f) is a p-ring iff every reduction f_j divides x^p - x.

    A unit f_j gives the zero ring as its component, which passes with no roots.

    Args:
        ring: A p-ring R
        f: Polynomial over R
        p: Prime
        projections: R → F_p projections; found with pRingProjections when omitted

    Raises:
        PreconditionError: If R is not a p-ring
        DegenerateInputError: If some f_j is zero
    """
    requirePrime(p)
    start = time.perf_counter()
    _requirePRing(ring, p)
    if projections is None:
        projections = pRingProjections(ring, p).projections
    plan = decomposeQuotient(f, projections)

    components = []
    witness = None
    for j, fj in enumerate(plan.reduced):
        unit = fj.isConstant()
        divides = unit or dividesXpMinusX(fj)
        roots = [] if unit else rootsWithMultiplicity(fj)
        components.append({"component": j, "f": str(fj), "unit": unit, "dividesXpMinusX": divides, "roots": [a for a, _ in roots]})
        if not divides and witness is None:
            witness = j
    rootCount = sum(len(c["roots"]) for c in components)
    detail = f"{len(components)} component(s), {rootCount} root(s) in total, predicted order {p}^{sum(int(g.degree) for g in plan.reduced)}"
    if witness is not None:
        detail = f"f_{witness} = {plan.reduced[witness]} does not divide x^{p} - x; " + detail
    report = theoremReport(f"{p}-ring", witness is None, detail, witness, time.perf_counter() - start)
    report.data = {"components": components, "rootCount": rootCount, "predictedOrder": plan.predictedOrder}
    return report


def amalgamationIsPRing(desc: AmalgDesc, p: int) -> DecisionReport:
    """
    A ⋈^f J is a p-ring iff A is a p-ring and J is a p-ideal of B.

    Raises:
        IdealInvalidError, IdentityConditionError: If the description is invalid
    """
    requirePrime(p)
    start = time.perf_counter()
    desc.verify()
    aReport = isPRingOracle(desc.a, p)
    jReport = isPIdeal(desc.ideal, p)
    witness = None
    if not aReport.verdict:
        witness = ["A", aReport.witness]
    elif not jReport.verdict:
        witness = ["J", jReport.witness]
    detail = f"A {p}-ring: {aReport.verdict}; J {p}-ideal: {jReport.verdict}"
    return theoremReport(f"{p}-ring", aReport.verdict and jReport.verdict, detail, witness, time.perf_counter() - start)


def trivialExtCheck(base: FiniteRing, module: ModuleDesc, p: Optional[int], mode: Union[CheckMode, str]) -> DecisionReport:
    """
    A ∝ E is a p-ring (or von Neumann regular) iff A is and E = 0.

    Raises:
        BaseMismatchError: If E is a module over another ring
        InvalidParameterError: If mode is pring and p is missing
    """
    mode = CheckMode(mode)
    if module.base != base:
        raise BaseMismatchError(f"module is over {module.base}, not {base}")
    start = time.perf_counter()
    if mode is CheckMode.pring:
        if p is None:
            raise InvalidParameterError("a prime p is required for the p-ring check")
        baseReport = isPRingOracle(base, p)
        name = f"{p}-ring"
    else:
        baseReport = isVnrOracle(base)
        name = "von Neumann regular"
    witness = None
    if not baseReport.verdict:
        witness = ["A", baseReport.witness]
    elif not module.isZero():
        witness = ["E", 1]
    detail = f"A: {baseReport.verdict}; |E| = {module.order}"
    return theoremReport(name, baseReport.verdict and module.isZero(), detail, witness, time.perf_counter() - start)


def pRingVnrCertificate(ring: FiniteRing, p: int, guard: Optional[int] = None, workers: Optional[int] = None) -> DecisionReport:
    """
    A p-ring is von Neumann regular, certified by one b per element.

    a = a²b is checked with b = a for p = 2 and b = a^(p-2) for p > 2, so the
    sweep is linear in |R| where the oracle searches every b.

    Raises:
        PreconditionError: If R is not a p-ring
        SizeGuardError: If R exceeds the size guard
        InternalInconsistencyError: If some a fails with its certificate
    """
    requirePrime(p)
    requireWithinGuard(ring.order, guard, what=str(ring))
    start = time.perf_counter()
    _requirePRing(ring, p)

    def certified(a: int) -> bool:
        b = a if p == 2 else ring.power(a, p - 2)
        return ring.mul(ring.mul(a, a), b) == a

    witness = sweepForWitness(ring.order, certified, workers)
    if witness is not None:
        raise InternalInconsistencyError(f"{ring} passed the {p}-ring check but a = a²b fails at element {witness}")
    certificate = "b = a" if p == 2 else f"b = a^{p - 2}"
    report = theoremReport("von Neumann regular", True, f"{p}-ring; a = a²b with {certificate} for all {ring.order} elements")
    report.elapsedSeconds = time.perf_counter() - start
    report.data = {"certificate": certificate}
    return report


@dataclass(frozen=True)
class IrreduciblePowerStatements:
    """The equivalent statements about F_p[x]/(f^k) for a monic irreducible f."""
    hasNonzeroPIdeal: bool
    isPRing: bool
    isPrimeField: bool
    degreeOneSimple: bool

    @property
    def consistent(self) -> bool:
        return self.hasNonzeroPIdeal == self.isPRing == self.isPrimeField == self.degreeOneSimple


def irreduciblePowerStatements(p: int, f: FpPoly, k: int) -> IrreduciblePowerStatements:
    """
    Evaluate, for g = f^k, whether F_p[x]/(g) has a nonzero p-ideal, is a
    p-ring, is isomorphic to F_p, and whether k = 1 and deg f = 1.

    Raises:
        InvalidParameterError: If f is not monic irreducible or k < 1
    """
    _requireOver(p, f)
    if k < 1:
        raise InvalidParameterError(f"exponent must be at least 1, got {k}")
    if not f.isMonic() or not isIrreducible(f):
        raise InvalidParameterError(f"{f} is not a monic irreducible polynomial over F_{p}")
    g = f ** k
    return IrreduciblePowerStatements(
        hasNonzeroPIdeal=quotientHasPIdeal(p, g).verdict,
        isPRing=dividesXpMinusX(g),
        isPrimeField=g.degree == 1,
        degreeOneSimple=k == 1 and f.degree == 1,
    )


__all__ = [
    "CheckMode",
    "pIdealsOfZmod",
    "pIdealTableOfZmod",
    "quotientHasPIdeal",
    "pIdealsOfQuotient",
    "pringPolyQuotientIsPRing",
    "amalgamationIsPRing",
    "trivialExtCheck",
    "pRingVnrCertificate",
    "IrreduciblePowerStatements",
    "irreduciblePowerStatements",
]
