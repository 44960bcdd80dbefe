#!/usr/bin/env python3
"""
Ring homomorphisms between finite rings.

Homomorphisms are extensional tables, verified exhaustively when they are
built. Non-unital homomorphisms are accepted and flagged. Coordinate
projections out of a product are structural and need no table, so they
work on products above the size guard.
"""

from abc import ABC, abstractmethod
from dataclasses import dataclass
from pathlib import Path
from typing import List, Optional, Sequence, Tuple

from pringkit.core.errors import HomInvalidError, InvalidParameterError, RingMismatchError, TableFileError
from pringkit.core.logging import printVerbose
from pringkit.core.settings import requireWithinGuard
from pringkit.rings.finiteRing import Element, FiniteRing
from pringkit.rings.product import ProductRing
from pringkit.rings.zmod import ZmodRing


class RingHom(ABC):
    """A map source → target respecting addition and multiplication."""

    def __init__(self, source: FiniteRing, target: FiniteRing):
        self.source = source
        self.target = target

    @abstractmethod
    def image(self, index: int) -> int:
        """Target index of the image of source element `index`."""

    @property
    def unital(self) -> bool:
        return self.image(self.source.oneIndex) == self.target.oneIndex

    def __call__(self, element: Element) -> Element:
        if element.ring != self.source:
            raise RingMismatchError(f"{element.ring} is not the source {self.source}")
        return Element(self.target, self.image(element.index))

    def table(self) -> Tuple[int, ...]:
        """Full image table (materializes the source)."""
        requireWithinGuard(self.source.order, what="homomorphism source")
        return tuple(self.image(i) for i in self.source.indices())

    def isSurjective(self) -> bool:
        return len(set(self.table())) == self.target.order

    def isBijective(self) -> bool:
        return self.source.order == self.target.order and self.isSurjective()

    def kernel(self) -> List[int]:
        """Sorted indices mapped to zero."""
        return [i for i, t in enumerate(self.table()) if t == 0]


class TableHom(RingHom):
    """A homomorphism given by its image table."""

    def __init__(self, source: FiniteRing, target: FiniteRing, table: Sequence[int]):
        super().__init__(source, target)
        self._table = tuple(table)
        self._unital = self._table[source.oneIndex] == target.oneIndex if self._table else False

    def image(self, index: int) -> int:
        return self._table[index]

    def table(self) -> Tuple[int, ...]:
        return self._table

    @property
    def unital(self) -> bool:
        return self._unital

    def __repr__(self) -> str:
        flag = "unital" if self._unital else "non-unital"
        return f"TableHom({self.source} -> {self.target}, {flag})"


class ComponentProjection(RingHom):
    """Projection of a product ring onto one of its factors."""

    def __init__(self, product: ProductRing, position: int):
        if not 0 <= position < len(product.factors):
            raise InvalidParameterError(f"no factor {position} in {product}")
        super().__init__(product, product.factors[position])
        self.position = position

    def image(self, index: int) -> int:
        return self.source.component(index, self.position)

    @property
    def unital(self) -> bool:
        return True

    def __repr__(self) -> str:
        return f"ComponentProjection({self.source} -> factor {self.position})"


@dataclass(frozen=True)
class HomReport:
    """Outcome of verifyHom."""
    valid: bool
    unital: bool
    law: Optional[str] = None
    witness: Optional[Tuple[int, ...]] = None


def verifyHom(hom: RingHom) -> HomReport:
    """
    Re-run every homomorphism check exhaustively.

    Returns:
        A HomReport naming the first violated law and its witness pair, if any
    """
    source, target = hom.source, hom.target
    requireWithinGuard(source.order, what="homomorphism source")
    table = [hom.image(i) for i in source.indices()]
    unital = table[source.oneIndex] == target.oneIndex

    for i, t in enumerate(table):
        if not 0 <= t < target.order:
            return HomReport(False, unital, "image out of range", (i,))
    if table[0] != 0:
        return HomReport(False, unital, "zero maps to zero", (0,))

    for x in source.indices():
        fx = table[x]
        for y in range(x, source.order):
            fy = table[y]
            if table[source.add(x, y)] != target.add(fx, fy):
                return HomReport(False, unital, "additivity", (x, y))
            if table[source.mul(x, y)] != target.mul(fx, fy):
                return HomReport(False, unital, "multiplicativity", (x, y))

    printVerbose(f"Verified homomorphism {source} -> {target} over {source.order} elements")
    return HomReport(True, unital)


def makeHom(source: FiniteRing, target: FiniteRing, table: Sequence[int]) -> TableHom:
    """
    Build and verify a homomorphism from its image table.

    Raises:
        InvalidParameterError: If the table has the wrong length
        HomInvalidError: If a law fails; the witness is the offending pair
    """
    if len(table) != source.order:
        raise InvalidParameterError(f"table has {len(table)} entries, source {source} has {source.order} elements")
    hom = TableHom(source, target, table)
    report = verifyHom(hom)
    if not report.valid:
        raise HomInvalidError(f"{report.law} fails at {report.witness}", witness=report.witness)
    return hom


def identityHom(ring: FiniteRing) -> TableHom:
    return makeHom(ring, ring, list(ring.indices()))


def firstComponentInteger(ring: FiniteRing, index: int) -> int:
    """The integer a₀ of an element: its residue, or the residue of its first factor."""
    while isinstance(ring, ProductRing):
        index = ring.component(index, 0)
        ring = ring.factors[0]
    if not isinstance(ring, ZmodRing):
        raise InvalidParameterError(f"{ring} has no integer first component")
    return index


def scaleFirstHom(source: FiniteRing, target: FiniteRing, k: int) -> TableHom:
    """
    The map a ↦ k·a₀ (a₀ the first coordinate of a, read as an integer).

    Raises:
        HomInvalidError: If this map is not a homomorphism for the given rings
    """
    table = [target.fromInteger(k * firstComponentInteger(source, i)) for i in source.indices()]
    return makeHom(source, target, table)


def crtHom(source: ZmodRing, target: ProductRing) -> TableHom:
    """
    The Chinese-remainder map r ↦ (r mod n_1, ..., r mod n_k) into a product of residue rings.

    Raises:
        InvalidParameterError: If a factor of the target is not Z/n_iZ with n_i | n
    """
    for factor in target.factors:
        if not isinstance(factor, ZmodRing) or source.modulus % factor.modulus != 0:
            raise InvalidParameterError(f"{factor} is not a residue ring of {source}")
    table = [target.encode([r % f.modulus for f in target.factors]) for r in source.indices()]
    return makeHom(source, target, table)


def loadHomTable(path: str, sourceOrder: Optional[int] = None) -> List[int]:
    """
    Read a `source_index -> target_index` table file.

    Blank lines and lines starting with '#' are ignored. Every source index
    in [0, sourceOrder) must appear exactly once.

    Raises:
        TableFileError: If the file is missing or malformed
    """
    filePath = Path(path)
    try:
        lines = filePath.read_text(encoding='utf-8').splitlines()
    except OSError as e:
        raise TableFileError(f"cannot read table file {path}: {e}") from e

    mapping = {}
    for lineNumber, line in enumerate(lines, start=1):
        stripped = line.split('#', 1)[0].strip()
        if not stripped:
            continue
        if '->' not in stripped:
            raise TableFileError(f"{path}:{lineNumber}: expected 'source -> target'")
        left, right = (part.strip() for part in stripped.split('->', 1))
        try:
            sourceIndex, targetIndex = int(left), int(right)
        except ValueError as e:
            raise TableFileError(f"{path}:{lineNumber}: indices must be integers") from e
        if sourceIndex in mapping:
            raise TableFileError(f"{path}:{lineNumber}: source index {sourceIndex} listed twice")
        mapping[sourceIndex] = targetIndex

    size = sourceOrder if sourceOrder is not None else len(mapping)
    missing = [i for i in range(size) if i not in mapping]
    if missing or len(mapping) != size:
        raise TableFileError(f"{path}: table must list every source index 0..{size - 1} exactly once")
    return [mapping[i] for i in range(size)]


__all__ = [
    "RingHom",
    "TableHom",
    "ComponentProjection",
    "HomReport",
    "verifyHom",
    "makeHom",
    "identityHom",
    "firstComponentInteger",
    "scaleFirstHom",
    "crtHom",
    "loadHomTable",
]
