#!/usr/bin/env python3
"""
Brute-force oracles: p-ring, von Neumann regularity and p-ideal tests by
exhaustive sweeps over element indices.

Each oracle checks its laws one at a time, x^p = x over every element
before px = 0, and reports the first offending element of the first law
that fails.
"""

import time
from typing import Callable, List, Optional, Sequence, Tuple

from pringkit.core.logging import printVerbose
from pringkit.core.numberTheory import requirePrime
from pringkit.core.settings import requireWithinGuard, requireWithinOracleGuard
from pringkit.decision.ideals import IdealDesc, IdealForm, checkIdealClosure, enumerateIdealsOracle, principalElements
from pringkit.decision.report import DecisionReport, Method
from pringkit.decision.sweep import sweepForWitness
from pringkit.rings.finiteRing import FiniteRing


def pRingLaws(ring: FiniteRing, p: int) -> List[Tuple[str, Callable[[int], bool]]]:
    """The two p-ring laws as (name, predicate on an element index)."""
    return [
        (f"x^{p} = x", lambda x: ring.power(x, p) == x),
        (f"{p}x = 0", lambda x: ring.intMul(p, x) == 0),
    ]


def _sweepLaws(elements: Sequence[int], laws, workers: Optional[int]) -> Tuple[Optional[int], str, int]:
    # (witness element, failed law, elements checked)
    checked = 0
    for name, law in laws:
        position = sweepForWitness(len(elements), lambda k: law(elements[k]), workers)
        if position is not None:
            return elements[position], name, checked + position + 1
        checked += len(elements)
    return None, "", checked


def isPRingOracle(ring: FiniteRing, p: int, guard: Optional[int] = None, workers: Optional[int] = None) -> DecisionReport:
    """
    Decide whether x^p = x and px = 0 for every element.

    Raises:
        NotPrimeError: If p is not prime
        SizeGuardError: If the ring exceeds the size guard
    """
    requirePrime(p)
    requireWithinGuard(ring.order, guard, what=str(ring))
    start = time.perf_counter()
    witness, law, checked = _sweepLaws(ring.indices(), pRingLaws(ring, p), workers)
    elapsed = time.perf_counter() - start
    printVerbose(f"p-ring oracle on {ring} (p={p}): {checked} element checks in {elapsed:.3f}s")
    detail = f"{law} fails" if witness is not None else f"every element satisfies x^{p} = x and {p}x = 0"
    return DecisionReport(f"{p}-ring", witness is None, Method.oracle, witness, checked, elapsed, detail)


def isVnrOracle(ring: FiniteRing, guard: Optional[int] = None, workers: Optional[int] = None) -> DecisionReport:
    """
    Decide whether every a has some b with a = a²b.

    Raises:
        SizeGuardError: If the ring exceeds the oracle guard
    """
    requireWithinOracleGuard(ring.order, guard, what=str(ring))
    start = time.perf_counter()

    def regular(a: int) -> bool:
        square = ring.mul(a, a)
        return any(ring.mul(square, b) == a for b in ring.indices())

    witness = sweepForWitness(ring.order, regular, workers)
    elapsed = time.perf_counter() - start
    checked = ring.order if witness is None else witness + 1
    printVerbose(f"vNr oracle on {ring}: {checked} elements in {elapsed:.3f}s")
    detail = "a = a²b has no solution b" if witness is not None else "every a = a²b for some b"
    return DecisionReport("von Neumann regular", witness is None, Method.oracle, witness, checked, elapsed, detail)


def isPIdeal(ideal: IdealDesc, p: int, workers: Optional[int] = None) -> DecisionReport:
    """
    Decide whether x^p = x and px = 0 for every element of the ideal.

    Raises:
        NotPrimeError: If p is not prime
        IdealInvalidError: If an extensional ideal is not closed
        SizeGuardError: If the ideal is too large to expand
    """
    requirePrime(p)
    elements = ideal.elements()
    if ideal.form is IdealForm.extensional:
        checkIdealClosure(ideal.ring, elements)
    start = time.perf_counter()
    witness, law, checked = _sweepLaws(elements, pRingLaws(ideal.ring, p), workers)
    elapsed = time.perf_counter() - start
    detail = f"{ideal}: " + (f"{law} fails" if witness is not None else f"all {len(elements)} elements pass")
    return DecisionReport(f"{p}-ideal", witness is None, Method.oracle, witness, checked, elapsed, detail)


def isPRingViaPrincipalIdeals(ring: FiniteRing, p: int, guard: Optional[int] = None) -> DecisionReport:
    """
    Decide the p-ring property as "every principal ideal is a p-ideal".

    Witness is the first generator x whose ideal xR is not a p-ideal.
    """
    requirePrime(p)
    requireWithinOracleGuard(ring.order, guard, what=str(ring))
    start = time.perf_counter()
    laws = pRingLaws(ring, p)
    checked = 0
    witness = None
    for x in ring.indices():
        members = principalElements(ring, x)
        checked += len(members)
        if not all(law(y) for y in members for _, law in laws):
            witness = x
            break
    elapsed = time.perf_counter() - start
    detail = "xR is not a p-ideal" if witness is not None else "every principal ideal is a p-ideal"
    return DecisionReport(f"{p}-ring via principal ideals", witness is None, Method.oracle, witness, checked, elapsed, detail)


def pIdealsOracle(ring: FiniteRing, p: int, guard: Optional[int] = None) -> List[IdealDesc]:
    """The p-ideals of a ring, filtered from the full ideal lattice."""
    return [ideal for ideal in enumerateIdealsOracle(ring, guard) if isPIdeal(ideal, p, workers=1).verdict]


def hasNonzeroPIdealOracle(ring: FiniteRing, p: int, guard: Optional[int] = None) -> DecisionReport:
    """
    Decide whether some nonzero ideal is a p-ideal.

    Witness is the smallest nonzero element that spans a p-ideal; the
    principal ideals suffice since every ideal contains one.

    Raises:
        SizeGuardError: If the ring exceeds the oracle guard
    """
    requirePrime(p)
    start = time.perf_counter()
    ideals = pIdealsOracle(ring, p, guard)
    nonzero = [ideal for ideal in ideals if not ideal.isZero()]
    witness = min((x for ideal in nonzero for x in ideal.elements() if x != 0), default=None)
    elapsed = time.perf_counter() - start
    detail = f"{len(ideals)} {p}-ideal(s) among the ideals of {ring}"
    return DecisionReport(f"nonzero {p}-ideal", bool(nonzero), Method.oracle, witness, ring.order, elapsed, detail)


__all__ = [
    "pRingLaws",
    "isPRingOracle",
    "isVnrOracle",
    "isPIdeal",
    "pIdealsOracle",
    "hasNonzeroPIdealOracle",
    "isPRingViaPrincipalIdeals",
]
