#!/usr/bin/env python3
"""
Syntax tree of the ring expression language, and its printer.

Every node carries the (start, stop) character span it was parsed from.
Spans are excluded from equality, so a printed expression reparses to an
equal tree.
"""

from dataclasses import dataclass, field
from typing import Optional, Tuple, Union

Span = Tuple[int, int]


@dataclass(frozen=True)
class ZmodNode:
    """Z/n."""
    n: int
    span: Span = field(default=(0, 0), compare=False)


@dataclass(frozen=True)
class GFNode:
    """GF(p)."""
    p: int
    span: Span = field(default=(0, 0), compare=False)


@dataclass(frozen=True)
class QuotientNode:
    """base[x]/(poly). The polynomial text is stored without whitespace."""
    base: "RingExpr"
    poly: str
    polyOffset: int = field(default=0, compare=False)
    span: Span = field(default=(0, 0), compare=False)


@dataclass(frozen=True)
class ProductNode:
    """factor * factor * ..."""
    factors: Tuple["RingExpr", ...]
    span: Span = field(default=(0, 0), compare=False)


@dataclass(frozen=True)
class ModuleSpec:
    """zero | free:k | Z/m:path."""
    kind: str
    rank: int = 0
    modulus: int = 0
    path: str = ""
    span: Span = field(default=(0, 0), compare=False)

    def __str__(self) -> str:
        if self.kind == "zero":
            return "zero"
        if self.kind == "free":
            return f"free:{self.rank}"
        return f"Z/{self.modulus}:{self.path}"


@dataclass(frozen=True)
class HomSpec:
    """id | scale0:k | @path."""
    kind: str
    scale: int = 0
    path: str = ""
    span: Span = field(default=(0, 0), compare=False)

    def __str__(self) -> str:
        if self.kind == "id":
            return "id"
        if self.kind == "scale0":
            return f"scale0:{self.scale}"
        return f"@{self.path}"


@dataclass(frozen=True)
class IdealSpec:
    """(g1, g2, ...): generator element indices."""
    generators: Tuple[int, ...]
    span: Span = field(default=(0, 0), compare=False)

    def __str__(self) -> str:
        return "(" + ", ".join(str(g) for g in self.generators) + ")"


@dataclass(frozen=True)
class TrivNode:
    """triv(base, module)."""
    base: "RingExpr"
    module: ModuleSpec
    span: Span = field(default=(0, 0), compare=False)


@dataclass(frozen=True)
class AmalgNode:
    """amalg(A, B, hom, ideal)."""
    a: "RingExpr"
    b: "RingExpr"
    hom: HomSpec
    ideal: IdealSpec
    span: Span = field(default=(0, 0), compare=False)


@dataclass(frozen=True)
class DupNode:
    """dup(A, ideal)."""
    a: "RingExpr"
    ideal: IdealSpec
    span: Span = field(default=(0, 0), compare=False)


@dataclass(frozen=True)
class FunNode:
    """fun(R, m): all functions from an m-element set into R."""
    base: "RingExpr"
    size: int
    span: Span = field(default=(0, 0), compare=False)


RingExpr = Union[ZmodNode, GFNode, QuotientNode, ProductNode, TrivNode, AmalgNode, DupNode, FunNode]


def formatRingExpr(node: RingExpr, parent: Optional[RingExpr] = None) -> str:
    """
    Print a tree in the canonical surface syntax.

    Products nested inside products, and products used as the base of a
    quotient, are parenthesized so that reparsing gives the same tree.
    """
    if isinstance(node, ZmodNode):
        return f"Z/{node.n}"
    if isinstance(node, GFNode):
        return f"GF({node.p})"
    if isinstance(node, QuotientNode):
        return f"{formatRingExpr(node.base, node)}[x]/({node.poly})"
    if isinstance(node, ProductNode):
        text = "*".join(formatRingExpr(factor, node) for factor in node.factors)
        if isinstance(parent, (ProductNode, QuotientNode)):
            return f"({text})"
        return text
    if isinstance(node, TrivNode):
        return f"triv({formatRingExpr(node.base)}, {node.module})"
    if isinstance(node, AmalgNode):
        return f"amalg({formatRingExpr(node.a)}, {formatRingExpr(node.b)}, {node.hom}, {node.ideal})"
    if isinstance(node, DupNode):
        return f"dup({formatRingExpr(node.a)}, {node.ideal})"
    if isinstance(node, FunNode):
        return f"fun({formatRingExpr(node.base)}, {node.size})"
    raise TypeError(f"not a ring expression: {node!r}")


__all__ = [
    "Span",
    "ZmodNode",
    "GFNode",
    "QuotientNode",
    "ProductNode",
    "ModuleSpec",
    "HomSpec",
    "IdealSpec",
    "TrivNode",
    "AmalgNode",
    "DupNode",
    "FunNode",
    "RingExpr",
    "formatRingExpr",
]
