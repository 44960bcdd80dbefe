#!/usr/bin/env python3
"""
Unit tests for the finite ring interface.
Tests Z/nZ, prime fields, products, element arithmetic, axiom checks and homomorphisms.
"""

import os
import sys
import tempfile
import unittest
from pathlib import Path

# Add project root to path
scriptDir = Path(__file__).parent.absolute()
sys.path.insert(0, str(scriptDir.parent.parent))

from pringkit.core.errors import (
    HomInvalidError,
    InvalidParameterError,
    NotPrimeError,
    RingMismatchError,
    SizeGuardError,
    TableFileError,
)
from pringkit.rings.arithmetic import ArithOp, AxiomViolation, enumerateElements, isExactCharacteristic, ringArith, verifyRingAxioms
from pringkit.rings.finiteRing import Element, RingFamily, sameRingOrRaise
from pringkit.rings.homomorphism import (
    ComponentProjection,
    crtHom,
    identityHom,
    loadHomTable,
    makeHom,
    scaleFirstHom,
    verifyHom,
)
from pringkit.rings.product import makeFunctionRing, makeProduct
from pringkit.rings.zmod import ZmodRing, isPrimeFieldLike, makePrimeField, makeZmod


class SquareOverflowRing(ZmodRing):
    """Z/n with 2·2 sent outside the element range."""

    def mul(self, i: int, j: int) -> int:
        if i == j == 2:
            return self.order
        return super().mul(i, j)


class TestZmod(unittest.TestCase):
    """Tests for Z/nZ and GF(p)."""

    def testArithmetic(self):
        """Test residue arithmetic in Z/60."""
        ring = makeZmod(60)
        self.assertEqual(ring.order, 60)
        self.assertEqual(ring.add(50, 20), 10)
        self.assertEqual(ring.mul(7, 9), 3)
        self.assertEqual(ring.neg(1), 59)
        self.assertEqual(ring.power(2, 6), 4)
        self.assertEqual(ring.characteristic, 60)
        self.assertEqual(ring.family, RingFamily.zmod)
        self.assertEqual(str(ring), "Z/60")

    def testRejectsSmallModulus(self):
        """Test Z/1 and Z/0 are rejected."""
        for n in (0, 1, -3):
            with self.assertRaises(InvalidParameterError):
                makeZmod(n)

    def testPrimeField(self):
        """Test GF(p) builds only for primes."""
        field = makePrimeField(5)
        self.assertEqual(str(field), "GF(5)")
        self.assertEqual(field.inverse(2), 3)
        self.assertEqual(field.family, RingFamily.primeField)
        with self.assertRaises(NotPrimeError):
            makePrimeField(4)

    def testPrimeFieldLike(self):
        """Test Z/p counts as a prime field but Z/4 does not."""
        self.assertTrue(isPrimeFieldLike(makeZmod(7)))
        self.assertTrue(isPrimeFieldLike(makePrimeField(7)))
        self.assertFalse(isPrimeFieldLike(makeZmod(4)))

    def testEqualityBySignature(self):
        """Test rings built twice from the same data are equal."""
        self.assertEqual(makeZmod(12), makeZmod(12))
        self.assertNotEqual(makeZmod(12), makeZmod(6))
        self.assertNotEqual(makeZmod(5), makePrimeField(5))


class TestElements(unittest.TestCase):
    """Tests for Element wrappers and ringArith."""

    def setUp(self):
        self.ring = makeZmod(12)

    def testOperators(self):
        """Test Element operators follow the ring."""
        a = self.ring.element(5)
        b = self.ring.element(9)
        self.assertEqual((a + b).index, 2)
        self.assertEqual((a - b).index, 8)
        self.assertEqual((a * b).index, 9)
        self.assertEqual((-a).index, 7)
        self.assertEqual((a ** 2).index, 1)
        self.assertEqual((3 * a).index, 3)
        self.assertEqual((a * -1).index, 7)

    def testEquality(self):
        """Test elements are equal iff same ring and index."""
        self.assertEqual(self.ring.element(3), makeZmod(12).element(3))
        self.assertNotEqual(self.ring.element(3), makeZmod(13).element(3))

    def testMixedRingsRaise(self):
        """Test arithmetic across rings is an error, never a coercion."""
        other = makeZmod(6).element(1)
        with self.assertRaises(RingMismatchError):
            _ = self.ring.element(1) + other
        with self.assertRaises(RingMismatchError):
            ringArith(self.ring, ArithOp.mul, self.ring.element(1), other)
        with self.assertRaises(RingMismatchError):
            sameRingOrRaise(self.ring.element(1), other)

    def testIndexOutOfRange(self):
        """Test element() rejects indices outside [0, order)."""
        with self.assertRaises(InvalidParameterError):
            self.ring.element(12)

    def testRingArith(self):
        """Test every ringArith operation."""
        x = self.ring.element(5)
        y = self.ring.element(10)
        self.assertEqual(ringArith(self.ring, ArithOp.add, x, y).index, 3)
        self.assertEqual(ringArith(self.ring, "mul", x, y).index, 2)
        self.assertEqual(ringArith(self.ring, ArithOp.neg, x).index, 7)
        self.assertEqual(ringArith(self.ring, ArithOp.pow, x, 3).index, 5)
        self.assertEqual(ringArith(self.ring, ArithOp.intMul, 4, x).index, 8)

    def testRingArithArity(self):
        """Test a wrong argument count is rejected."""
        with self.assertRaises(InvalidParameterError):
            ringArith(self.ring, ArithOp.neg, self.ring.element(1), self.ring.element(2))

    def testNegativeExponent(self):
        """Test negative exponents are rejected."""
        with self.assertRaises(InvalidParameterError):
            ringArith(self.ring, ArithOp.pow, self.ring.element(5), -1)


class TestProducts(unittest.TestCase):
    """Tests for product and function rings."""

    def testEncoding(self):
        """Test the first factor is the least significant digit."""
        ring = makeProduct([makeZmod(4), makeZmod(6)])
        self.assertEqual(ring.order, 24)
        self.assertEqual(ring.encode([3, 2]), 3 + 4 * 2)
        self.assertEqual(ring.decode(11), (3, 2))
        self.assertEqual(ring.oneIndex, ring.encode([1, 1]))
        self.assertEqual(ring.formatElement(11), "(3,2)")

    def testComponentwiseArithmetic(self):
        """Test arithmetic acts per component."""
        ring = makeProduct([makeZmod(4), makeZmod(6)])
        x = ring.encode([3, 5])
        y = ring.encode([2, 4])
        self.assertEqual(ring.decode(ring.add(x, y)), (1, 3))
        self.assertEqual(ring.decode(ring.mul(x, y)), (2, 2))
        self.assertEqual(ring.decode(ring.power(x, 2)), (1, 1))

    def testCharacteristicIsLcm(self):
        """Test char(Z/4 × Z/6) = 12."""
        ring = makeProduct([makeZmod(4), makeZmod(6)])
        self.assertEqual(ring.characteristic, 12)
        self.assertTrue(isExactCharacteristic(ring, 12))
        self.assertFalse(isExactCharacteristic(ring, 6))

    def testNestedDescription(self):
        """Test nested products are parenthesized."""
        inner = makeProduct([makeZmod(2), makeZmod(3)])
        ring = makeProduct([inner, makeZmod(5)])
        self.assertEqual(ring.describe(), "(Z/2*Z/3)*Z/5")

    def testEmptyProductRejected(self):
        """Test a product needs a factor."""
        with self.assertRaises(InvalidParameterError):
            makeProduct([])

    def testFunctionRing(self):
        """Test fun(R, m) is R^m and is never enumerated."""
        ring = makeFunctionRing(makePrimeField(17), 4)
        self.assertEqual(ring.order, 17 ** 4)
        self.assertTrue(ring.isPrimeFieldPower())
        with self.assertRaises(InvalidParameterError):
            makeFunctionRing(makePrimeField(2), 0)

    def testAxioms(self):
        """Test the full ring axioms on a small product."""
        ring = makeProduct([makeZmod(2), makeZmod(3)])
        self.assertIsNone(verifyRingAxioms(ring, full=True))

    def testAxiomsCoverDiagonalPairs(self):
        """Test a product defined wrongly only at x = y is caught."""
        violation = verifyRingAxioms(SquareOverflowRing(4))
        self.assertEqual(violation, AxiomViolation("closure of multiplication", (2, 2)))
        self.assertIsNone(verifyRingAxioms(makeZmod(4)))

    def testEnumerationGuard(self):
        """Test enumeration respects the size guard."""
        ring = makeFunctionRing(makePrimeField(17), 4)
        with self.assertRaises(SizeGuardError):
            list(enumerateElements(ring))
        small = makeZmod(5)
        self.assertEqual([e.index for e in enumerateElements(small)], [0, 1, 2, 3, 4])
        with self.assertRaises(SizeGuardError):
            enumerateElements(small, guard=4)


class TestHomomorphisms(unittest.TestCase):
    """Tests for verified ring homomorphisms."""

    def testReductionHom(self):
        """Test Z/6 → Z/3 reduction is a unital homomorphism."""
        source, target = makeZmod(6), makeZmod(3)
        hom = makeHom(source, target, [r % 3 for r in range(6)])
        self.assertTrue(hom.unital)
        self.assertEqual(hom.kernel(), [0, 3])
        self.assertTrue(hom.isSurjective())
        self.assertEqual(hom(source.element(5)), target.element(2))

    def testInvalidTableNamesWitness(self):
        """Test a non-additive table is rejected with its witness pair."""
        source, target = makeZmod(4), makeZmod(2)
        with self.assertRaises(HomInvalidError) as cm:
            makeHom(source, target, [0, 1, 1, 1])
        self.assertIsNotNone(cm.exception.witness)
        self.assertIn("fails at", str(cm.exception))

    def testZeroMustMapToZero(self):
        """Test table[0] = 0 is required."""
        with self.assertRaises(HomInvalidError):
            makeHom(makeZmod(2), makeZmod(2), [1, 1])

    def testTableLength(self):
        """Test a short table is rejected."""
        with self.assertRaises(InvalidParameterError):
            makeHom(makeZmod(6), makeZmod(3), [0, 1, 2])

    def testNonUnitalScaleHom(self):
        """Test a ↦ 3·a₀ from F_2² to Z/6 is a non-unital homomorphism."""
        a = makeFunctionRing(makePrimeField(2), 2)
        b = makeZmod(6)
        hom = scaleFirstHom(a, b, 3)
        self.assertFalse(hom.unital)
        self.assertEqual(hom.image(a.oneIndex), 3)
        self.assertTrue(verifyHom(hom).valid)

    def testScaleHomThatFails(self):
        """Test a ↦ 2·a₀ from F_2 to Z/6 is not multiplicative."""
        with self.assertRaises(HomInvalidError):
            scaleFirstHom(makePrimeField(2), makeZmod(6), 2)

    def testCrtHom(self):
        """Test the CRT map Z/6 → Z/2 × Z/3 is bijective."""
        target = makeProduct([makeZmod(2), makeZmod(3)])
        hom = crtHom(makeZmod(6), target)
        self.assertTrue(hom.isBijective())
        with self.assertRaises(InvalidParameterError):
            crtHom(makeZmod(6), makeProduct([makeZmod(4)]))

    def testIdentity(self):
        """Test the identity homomorphism."""
        ring = makeZmod(4)
        hom = identityHom(ring)
        self.assertEqual(hom.table(), (0, 1, 2, 3))
        self.assertTrue(hom.unital)

    def testProjectionAboveGuard(self):
        """Test coordinate projections need no table."""
        ring = makeFunctionRing(makePrimeField(17), 4)
        projection = ComponentProjection(ring, 2)
        index = ring.encode([1, 2, 3, 4])
        self.assertEqual(projection.image(index), 3)
        self.assertTrue(projection.unital)
        with self.assertRaises(InvalidParameterError):
            ComponentProjection(ring, 4)


class TestHomTableFiles(unittest.TestCase):
    """Tests for loadHomTable."""

    def setUp(self):
        self.tempDir = tempfile.TemporaryDirectory()
        self.addCleanup(self.tempDir.cleanup)

    def writeTable(self, text: str) -> str:
        path = os.path.join(self.tempDir.name, "table.txt")
        with open(path, 'w', encoding='utf-8') as f:
            f.write(text)
        return path

    def testReadsTable(self):
        """Test comments and blank lines are ignored."""
        path = self.writeTable("# reduction mod 3\n0 -> 0\n1 -> 1\n\n2 -> 2\n3 -> 0\n4 -> 1\n5 -> 2\n")
        self.assertEqual(loadHomTable(path, 6), [0, 1, 2, 0, 1, 2])

    def testDuplicateSource(self):
        """Test a source index listed twice is rejected."""
        path = self.writeTable("0 -> 0\n0 -> 1\n")
        with self.assertRaises(TableFileError):
            loadHomTable(path)

    def testMissingSource(self):
        """Test every source index must appear."""
        path = self.writeTable("0 -> 0\n2 -> 1\n")
        with self.assertRaises(TableFileError):
            loadHomTable(path, 3)

    def testMalformedLine(self):
        """Test a line without an arrow is rejected."""
        path = self.writeTable("0 0\n")
        with self.assertRaises(TableFileError):
            loadHomTable(path)

    def testMissingFile(self):
        """Test an unreadable path is a TableFileError."""
        with self.assertRaises(TableFileError):
            loadHomTable(os.path.join(self.tempDir.name, "missing.txt"))


if __name__ == "__main__":
    unittest.main()
