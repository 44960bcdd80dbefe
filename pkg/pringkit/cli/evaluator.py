#!/usr/bin/env python3
"""
Evaluation of ring expression trees into FiniteRing values.

Products and function rings are structural and never enumerate their
elements, so a product can be far above the size guard. Quotients over a
p-ring base can be planned (split into components) without being built.
"""

from dataclasses import dataclass
from math import gcd
from functools import reduce
from pathlib import Path
from typing import Dict, Optional, Tuple, Union

from pringkit.core.errors import InvalidParameterError, PreconditionError, RingExprSyntaxError
from pringkit.core.logging import printVerbose
from pringkit.core.numberTheory import isPrime
from pringkit.cli.ringExpr import (
    AmalgNode,
    DupNode,
    FunNode,
    GFNode,
    HomSpec,
    IdealSpec,
    ModuleSpec,
    ProductNode,
    QuotientNode,
    RingExpr,
    TrivNode,
    ZmodNode,
)
from pringkit.constructions.amalgamation import AmalgDesc, makeAmalgamation
from pringkit.constructions.modules import ModuleDesc, cyclicModule, freeModule, loadActionTable, zeroModule
from pringkit.constructions.quotient import PolyOverRing, QuotientDecomposition, decomposeQuotient, makeQuotient, makeQuotientOverPRing
from pringkit.constructions.trivialExtension import makeTrivialExtension
from pringkit.decision.ideals import IdealDesc, generatedIdeal, zmodIdeal
from pringkit.decision.mccoy import pRingProjections
from pringkit.poly.fpPoly import FpPoly
from pringkit.rings.finiteRing import FiniteRing
from pringkit.rings.homomorphism import RingHom, identityHom, loadHomTable, makeHom, scaleFirstHom
from pringkit.rings.product import makeFunctionRing, makeProduct
from pringkit.rings.zmod import ZmodRing, isPrimeFieldLike, makePrimeField, makeZmod


@dataclass(frozen=True)
class QuotientPlan:
    """A quotient node resolved up to, but not including, building the ring."""
    base: FiniteRing
    p: int
    # Set when the base is a prime field
    modulus: Optional[FpPoly] = None
    # Set when the base is a p-ring with several maximal ideals
    decomposition: Optional[QuotientDecomposition] = None

    @property
    def overPrimeField(self) -> bool:
        return self.modulus is not None

    @property
    def predictedOrder(self) -> int:
        if self.overPrimeField:
            return self.p ** int(self.modulus.degree)
        return self.decomposition.predictedOrder


class RingEvaluator:
    """
    Evaluates the nodes of one expression, caching each subtree's ring.

    Args:
        source: The expression text, used to render diagnostics
        tableDir: Directory that relative table file paths are resolved against
        guard: Size guard override
    """

    def __init__(self, source: str = "", tableDir: Optional[Union[str, Path]] = None, guard: Optional[int] = None):
        self.source = source
        self.tableDir = Path(tableDir) if tableDir is not None else Path.cwd()
        self.guard = guard
        self.cache: Dict[RingExpr, FiniteRing] = {}

    def ring(self, node: RingExpr) -> FiniteRing:
        """The ring a node denotes."""
        if node not in self.cache:
            self.cache[node] = self._build(node)
        return self.cache[node]

    def _build(self, node: RingExpr) -> FiniteRing:
        if isinstance(node, ZmodNode):
            return makeZmod(node.n)
        if isinstance(node, GFNode):
            return makePrimeField(node.p)
        if isinstance(node, ProductNode):
            return makeProduct([self.ring(factor) for factor in node.factors])
        if isinstance(node, FunNode):
            return makeFunctionRing(self.ring(node.base), node.size)
        if isinstance(node, QuotientNode):
            return self.buildQuotient(self.quotientPlan(node))
        if isinstance(node, TrivNode):
            base = self.ring(node.base)
            return makeTrivialExtension(base, self.module(base, node.module), self.guard)
        if isinstance(node, (AmalgNode, DupNode)):
            return makeAmalgamation(self.amalgDesc(node), self.guard)
        raise TypeError(f"not a ring expression: {node!r}")

    # Quotients

    def quotientPlan(self, node: QuotientNode) -> QuotientPlan:
        """
        Resolve base[x]/(f) without building it.

        Raises:
            PreconditionError: If the base is neither a prime field nor a p-ring
            DegenerateInputError: If f reduces to zero in some component
        """
        base = self.ring(node.base)
        poly = self.polynomial(base, node)
        if isPrimeFieldLike(base):
            p = base.modulus
            return QuotientPlan(base, p, modulus=FpPoly(p, poly.coeffs, checkPrime=False))
        p = base.characteristic
        if not isPrime(p):
            raise PreconditionError(f"{base} has characteristic {p}; polynomial quotients need a p-ring base")
        projections = pRingProjections(base, p).projections
        return QuotientPlan(base, p, decomposition=decomposeQuotient(poly, projections))

    def polynomial(self, base: FiniteRing, node: QuotientNode) -> PolyOverRing:
        try:
            return PolyOverRing.fromText(base, node.poly, node.polyOffset)
        except RingExprSyntaxError as e:
            raise RingExprSyntaxError(e.message, e.position, e.expected, self.source) from e

    def buildQuotient(self, plan: QuotientPlan) -> FiniteRing:
        if plan.overPrimeField:
            return makeQuotient(plan.p, plan.modulus, self.guard)
        decomposition = plan.decomposition
        return makeQuotientOverPRing(plan.base, decomposition.poly, decomposition.projections, self.guard)

    # Modules, homomorphisms and ideals

    def tablePath(self, path: str) -> str:
        candidate = Path(path)
        if not candidate.is_absolute():
            candidate = self.tableDir / candidate
        return str(candidate)

    def module(self, base: FiniteRing, spec: ModuleSpec) -> ModuleDesc:
        if spec.kind == "zero":
            return zeroModule(base)
        if spec.kind == "free":
            return freeModule(base, spec.rank)
        table = loadActionTable(self.tablePath(spec.path), base.order)
        return cyclicModule(base, spec.modulus, table)

    def hom(self, source: FiniteRing, target: FiniteRing, spec: HomSpec) -> RingHom:
        if spec.kind == "id":
            if source != target:
                raise InvalidParameterError(f"'id' needs equal rings, got {source} and {target}")
            return identityHom(source)
        if spec.kind == "scale0":
            return scaleFirstHom(source, target, spec.scale)
        return makeHom(source, target, loadHomTable(self.tablePath(spec.path), source.order))

    def ideal(self, ring: FiniteRing, spec: IdealSpec) -> IdealDesc:
        """The ideal generated by element indices; residue rings keep the kZ/nZ form."""
        for g in spec.generators:
            if g >= ring.order:
                raise InvalidParameterError(f"generator index {g} outside [0, {ring.order}) of {ring}")
        if isinstance(ring, ZmodRing):
            return zmodIdeal(ring, reduce(gcd, spec.generators, 0))
        return generatedIdeal(ring, spec.generators)

    def amalgDesc(self, node: Union[AmalgNode, DupNode]) -> AmalgDesc:
        """The description behind amalg(...) or dup(...), verified."""
        if isinstance(node, DupNode):
            a = self.ring(node.a)
            desc = AmalgDesc(a, a, identityHom(a), self.ideal(a, node.ideal))
        else:
            a = self.ring(node.a)
            b = self.ring(node.b)
            desc = AmalgDesc(a, b, self.hom(a, b, node.hom), self.ideal(b, node.ideal))
        desc.verify()
        printVerbose(f"Amalgamation {desc.describe()}")
        return desc

    def trivParts(self, node: TrivNode) -> Tuple[FiniteRing, ModuleDesc]:
        """(A, E) of triv(A, E)."""
        base = self.ring(node.base)
        return base, self.module(base, node.module)


def evaluateRingExpr(node: RingExpr, source: str = "", tableDir: Optional[Union[str, Path]] = None) -> FiniteRing:
    """
    Build the ring an expression denotes.

    Raises:
        RingKitError: Any construction error (invalid parameters, size guard, invalid hom or ideal)
    """
    return RingEvaluator(source, tableDir).ring(node)


__all__ = [
    "QuotientPlan",
    "RingEvaluator",
    "evaluateRingExpr",
]
