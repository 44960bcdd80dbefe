#!/usr/bin/env python3
"""
Routes a property question about a ring expression to the theorem that
decides it structurally, or to the brute-force oracle on the built ring.

Theorems follow the shape of the expression: residue rings and prime
fields by valuations, quotients by roots and divisibility of their
moduli, amalgamations and trivial extensions by their parts, and products
factor by factor. Where no theorem applies the theorem side returns None.
"""

import time
from enum import Enum
from typing import List, Optional

from pringkit.core.errors import InvalidParameterError
from pringkit.core.numberTheory import isSquarefreeInteger, pValuation, requirePrime
from pringkit.cli.evaluator import RingEvaluator
from pringkit.cli.ringExpr import AmalgNode, DupNode, FunNode, GFNode, ProductNode, QuotientNode, RingExpr, TrivNode, ZmodNode
from pringkit.decision.fastPaths import (
    CheckMode,
    amalgamationIsPRing,
    pIdealsOfZmod,
    pRingVnrCertificate,
    pringPolyQuotientIsPRing,
    quotientHasPIdeal,
    trivialExtCheck,
)
from pringkit.decision.oracles import hasNonzeroPIdealOracle, isPRingOracle, isVnrOracle
from pringkit.decision.report import DecisionReport, theoremReport
from pringkit.poly.algorithms import dividesXpMinusX, isSquarefree


class Property(Enum):
    """Questions the command line can decide."""
    pRing = "pRing"
    nonzeroPIdeal = "nonzeroPIdeal"
    vnr = "vnr"

    def needsPrime(self) -> bool:
        return self is not Property.vnr

    def reportName(self, p: Optional[int]) -> str:
        if self is Property.pRing:
            return f"{p}-ring"
        if self is Property.nonzeroPIdeal:
            return f"nonzero {p}-ideal"
        return "von Neumann regular"


class PropertyDispatcher:
    """
    Decides properties of the nodes of one expression.

    Args:
        evaluator: Evaluator holding the expression's rings
        p: The prime for p-dependent properties (None allows only vnr)
    """

    def __init__(self, evaluator: RingEvaluator, p: Optional[int]):
        self.evaluator = evaluator
        self.p = requirePrime(p) if p is not None else None

    def _requirePrime(self, prop: Property) -> int:
        if prop.needsPrime() and self.p is None:
            raise InvalidParameterError(f"--p is required to decide '{prop.reportName('p')}'")
        return self.p

    # Theorem side

    def theorem(self, node: RingExpr, prop: Property) -> Optional[DecisionReport]:
        """The structural verdict, or None when no theorem covers this node."""
        self._requirePrime(prop)
        start = time.perf_counter()
        if isinstance(node, (ZmodNode, GFNode)):
            report = self._residueTheorem(node, prop)
        elif isinstance(node, QuotientNode):
            report = self._quotientTheorem(node, prop)
        elif isinstance(node, (ProductNode, FunNode)):
            report = self._productTheorem(node, prop)
        elif isinstance(node, TrivNode):
            report = self._trivTheorem(node, prop)
        elif isinstance(node, (AmalgNode, DupNode)):
            report = self._amalgTheorem(node, prop)
        else:
            report = None
        if report is not None and not report.elapsedSeconds:
            report.elapsedSeconds = time.perf_counter() - start
        return report

    def _residueTheorem(self, node, prop: Property) -> DecisionReport:
        ring = self.evaluator.ring(node)
        n = ring.modulus
        p = self.p
        name = prop.reportName(p)
        if prop is Property.pRing:
            return theoremReport(name, n == p, f"{ring} has characteristic {n}")
        if prop is Property.nonzeroPIdeal:
            ideals = pIdealsOfZmod(n, p)
            if len(ideals) > 1:
                detail = f"unique nonzero {p}-ideal: {ideals[1]}"
            else:
                detail = f"no nonzero {p}-ideal (v_{p}({n}) = {pValuation(n, p)})"
            report = theoremReport(name, len(ideals) > 1, detail)
            report.data = {"pIdeals": [ideal.describe() for ideal in ideals]}
            return report
        return theoremReport(name, isSquarefreeInteger(n), f"{n} is {'' if isSquarefreeInteger(n) else 'not '}squarefree")

    def _quotientTheorem(self, node: QuotientNode, prop: Property) -> DecisionReport:
        plan = self.evaluator.quotientPlan(node)
        p = self.p
        name = prop.reportName(p)
        if prop is not Property.vnr and p != plan.p:
            # p·1 is a unit, so px = 0 forces x = 0
            return theoremReport(name, False, f"{p} is invertible in characteristic {plan.p}", witness=1)

        if plan.overPrimeField:
            f = plan.modulus
            if prop is Property.pRing:
                divides = dividesXpMinusX(f)
                return theoremReport(name, divides, f"{f} {'divides' if divides else 'does not divide'} x^{p} - x")
            if prop is Property.nonzeroPIdeal:
                return quotientHasPIdeal(p, f)
            squarefree = isSquarefree(f)
            return theoremReport(name, squarefree, f"{f} is {'' if squarefree else 'not '}squarefree")

        decomposition = plan.decomposition
        if prop is Property.pRing:
            return pringPolyQuotientIsPRing(plan.base, decomposition.poly, p, decomposition.projections)
        if prop is Property.nonzeroPIdeal:
            hits = [j for j, fj in decomposition.nontrivial if quotientHasPIdeal(p, fj).verdict]
            detail = f"components with a simple root: {hits or 'none'}"
            return theoremReport(name, bool(hits), detail)
        failing = [j for j, fj in decomposition.nontrivial if not isSquarefree(fj)]
        detail = f"components with a repeated factor: {failing or 'none'}"
        return theoremReport(name, not failing, detail, failing[0] if failing else None)

    def _productTheorem(self, node, prop: Property) -> Optional[DecisionReport]:
        factors = node.factors if isinstance(node, ProductNode) else (node.base,) * node.size
        parts: List[DecisionReport] = []
        for factor in factors:
            part = self.theorem(factor, prop)
            if part is None:
                return None
            parts.append(part)
        name = prop.reportName(self.p)
        verdicts = [part.verdict for part in parts]
        detail = "factor verdicts: " + ", ".join("yes" if v else "no" for v in verdicts)
        if prop is Property.nonzeroPIdeal:
            # I_1 × ... × I_k is a p-ideal iff every I_k is
            witness = next((k for k, v in enumerate(verdicts) if v), None)
            return theoremReport(name, any(verdicts), detail, witness)
        witness = next((k for k, v in enumerate(verdicts) if not v), None)
        return theoremReport(name, all(verdicts), detail, witness)

    def _trivTheorem(self, node: TrivNode, prop: Property) -> Optional[DecisionReport]:
        if prop is Property.nonzeroPIdeal:
            return None
        base, module = self.evaluator.trivParts(node)
        mode = CheckMode.pring if prop is Property.pRing else CheckMode.vnr
        return trivialExtCheck(base, module, self.p, mode)

    def _amalgTheorem(self, node, prop: Property) -> Optional[DecisionReport]:
        if prop is Property.nonzeroPIdeal or self.p is None:
            return None
        pRing = amalgamationIsPRing(self.evaluator.amalgDesc(node), self.p)
        if prop is Property.pRing:
            return pRing
        # regularity is only certified for p-rings
        if not pRing.verdict:
            return None
        return pRingVnrCertificate(self.evaluator.ring(node), self.p)

    # Oracle side

    def oracle(self, node: RingExpr, prop: Property) -> DecisionReport:
        """
        The brute-force verdict on the built ring.

        Raises:
            SizeGuardError: If the ring is too large to build or sweep
        """
        self._requirePrime(prop)
        ring = self.evaluator.ring(node)
        if prop is Property.pRing:
            return isPRingOracle(ring, self.p)
        if prop is Property.nonzeroPIdeal:
            return hasNonzeroPIdealOracle(ring, self.p)
        return isVnrOracle(ring)

    def decide(self, node: RingExpr, prop: Property) -> DecisionReport:
        """Theorem when one applies, otherwise the oracle."""
        report = self.theorem(node, prop)
        return report if report is not None else self.oracle(node, prop)


__all__ = [
    "Property",
    "PropertyDispatcher",
]
