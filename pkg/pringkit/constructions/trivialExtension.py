#!/usr/bin/env python3
"""
Trivial ring extension (idealization) A ∝ E.

Elements are pairs (a, e) encoded as a + |A|·e, so the A-part is the least
significant digit. (a, e)(b, f) = (ab, a·f + b·e).
"""

from typing import Any, Dict, Hashable, Optional, Tuple

from pringkit.core.errors import BaseMismatchError, InternalInconsistencyError
from pringkit.core.logging import printVerbose
from pringkit.core.settings import requireWithinGuard
from pringkit.constructions.modules import ModuleDesc
from pringkit.rings.arithmetic import verifyRingAxioms
from pringkit.rings.finiteRing import FiniteRing, RingFamily


class TrivialExtensionRing(FiniteRing):
    """A ∝ E."""

    family = RingFamily.trivialExt

    def __init__(self, base: FiniteRing, module: ModuleDesc):
        self.base = base
        self.module = module
        super().__init__(base.order * module.order)

    def pair(self, index: int) -> Tuple[int, int]:
        """(a, e) indices of an element."""
        e, a = divmod(index, self.base.order)
        return a, e

    def encodePair(self, a: int, e: int) -> int:
        return a + self.base.order * e

    @property
    def oneIndex(self) -> int:
        return self.encodePair(self.base.oneIndex, 0)

    def add(self, i: int, j: int) -> int:
        a, e = self.pair(i)
        b, f = self.pair(j)
        return self.encodePair(self.base.add(a, b), self.module.add(e, f))

    def neg(self, i: int) -> int:
        a, e = self.pair(i)
        return self.encodePair(self.base.neg(a), self.module.neg(e))

    def mul(self, i: int, j: int) -> int:
        a, e = self.pair(i)
        b, f = self.pair(j)
        return self.encodePair(self.base.mul(a, b), self.module.add(self.module.act(a, f), self.module.act(b, e)))

    @property
    def params(self) -> Dict[str, Any]:
        return {"base": self.base.describe(), "module": self.module.describe()}

    def describe(self) -> str:
        return f"triv({self.base.describe()}, {self.module.describe()})"

    def signature(self) -> Hashable:
        return (self.family.value, self.module.signature())

    def formatElement(self, i: int) -> str:
        a, e = self.pair(i)
        return f"({self.base.formatElement(a)},{e})"


def makeTrivialExtension(base: FiniteRing, module: ModuleDesc, guard: Optional[int] = None) -> TrivialExtensionRing:
    """
    Build A ∝ E.

    Commutativity and the identity (1, 0) are checked exhaustively.

    Raises:
        BaseMismatchError: If E is a module over another ring
        SizeGuardError: If |A|·|E| exceeds the size guard
    """
    if module.base != base:
        raise BaseMismatchError(f"module is over {module.base}, not {base}")
    requireWithinGuard(base.order * module.order, guard, what=f"triv({base}, {module.describe()})")
    ring = TrivialExtensionRing(base, module)
    violation = verifyRingAxioms(ring, guard=guard)
    if violation is not None:
        raise InternalInconsistencyError(f"{ring}: {violation.law} fails at {violation.witness}")
    printVerbose(f"Verified commutativity and identity of {ring} over {ring.order} elements")
    return ring


__all__ = [
    "TrivialExtensionRing",
    "makeTrivialExtension",
]
