#!/usr/bin/env python3
"""
Unit tests for ideals and the brute-force oracles.
Tests ideal descriptors, the ideal-lattice oracle, p-ring, p-ideal and
regularity sweeps, and partitioned sweeps with deterministic witnesses.
"""

import sys
import unittest
from pathlib import Path

import sympy

# Add project root to path
scriptDir = Path(__file__).parent.absolute()
sys.path.insert(0, str(scriptDir.parent.parent))

from pringkit.core.errors import IdealInvalidError, InvalidParameterError, NotPrimeError, SizeGuardError
from pringkit.constructions.quotient import makeQuotient
from pringkit.decision.ideals import (
    IdealForm,
    enumerateIdealsOracle,
    extensionalIdeal,
    generatedIdeal,
    idealSum,
    maximalIdeals,
    principalIdeal,
    productIdeal,
    quotientIdeal,
    unitIdeal,
    zeroIdeal,
    zmodIdeal,
)
from pringkit.decision.oracles import (
    hasNonzeroPIdealOracle,
    isPIdeal,
    isPRingOracle,
    isPRingViaPrincipalIdeals,
    isVnrOracle,
    pIdealsOracle,
)
from pringkit.decision.report import Method
from pringkit.decision.sweep import partition, sweepForWitness
from pringkit.poly.fpPoly import FpPoly
from pringkit.rings.product import makeFunctionRing, makeProduct
from pringkit.rings.zmod import makePrimeField, makeZmod


class TestIdealDescriptors(unittest.TestCase):
    """Tests for structural and extensional ideals."""

    def testZmodIdeal(self):
        """Test kZ/nZ uses gcd(k, n) and is described structurally."""
        ring = makeZmod(60)
        ideal = zmodIdeal(ring, 40)
        self.assertEqual(ideal.generator, 20)
        self.assertEqual(ideal.order, 3)
        self.assertEqual(ideal.describe(), "20Z/60Z")
        self.assertEqual(ideal.elements(), (0, 20, 40))
        self.assertTrue(ideal.contains(40))
        self.assertFalse(ideal.contains(30))

    def testZeroAndUnit(self):
        """Test the zero and unit ideals."""
        ring = makeZmod(6)
        self.assertEqual(zeroIdeal(ring).describe(), "(0)")
        self.assertTrue(zeroIdeal(ring).isZero())
        self.assertTrue(unitIdeal(ring).isUnit())
        field = makeQuotient(2, "x^2+x+1")
        self.assertEqual(zeroIdeal(field).elements(), (0,))
        self.assertEqual(unitIdeal(field).order, 4)

    def testQuotientIdeal(self):
        """Test (x)/(x^2) in F_2[x]/(x^2)."""
        ring = makeQuotient(2, "x^2")
        ideal = quotientIdeal(ring, FpPoly(2, [0, 1]))
        self.assertEqual(ideal.order, 2)
        self.assertEqual(ideal.elements(), (0, ring.xIndex))
        self.assertEqual(ideal.describe(), "(x)/(x^2)")

    def testProductIdeal(self):
        """Test I × J membership and order without expansion."""
        ring = makeProduct([makeZmod(4), makeZmod(6)])
        ideal = productIdeal(ring, [zmodIdeal(ring.factors[0], 2), zmodIdeal(ring.factors[1], 3)])
        self.assertEqual(ideal.order, 4)
        self.assertTrue(ideal.contains(ring.encode([2, 3])))
        self.assertFalse(ideal.contains(ring.encode([1, 3])))
        self.assertEqual(len(ideal.elements()), 4)
        with self.assertRaises(InvalidParameterError):
            productIdeal(ring, [zmodIdeal(ring.factors[0], 2)])

    def testStructuralEqualsExtensional(self):
        """Test equality compares element sets across forms."""
        ring = makeZmod(12)
        self.assertEqual(zmodIdeal(ring, 4), principalIdeal(ring, 8))
        self.assertEqual(hash(zmodIdeal(ring, 4)), hash(principalIdeal(ring, 8)))
        self.assertNotEqual(zmodIdeal(ring, 4), zmodIdeal(ring, 6))

    def testSumAndGenerated(self):
        """Test (4) + (6) = (2) in Z/12."""
        ring = makeZmod(12)
        self.assertEqual(idealSum(zmodIdeal(ring, 4), zmodIdeal(ring, 6)).generator, 2)
        self.assertEqual(generatedIdeal(ring, [4, 6]).elements(), (0, 2, 4, 6, 8, 10))
        self.assertEqual(generatedIdeal(ring, []).elements(), (0,))
        extensional = idealSum(principalIdeal(ring, 4), principalIdeal(ring, 6))
        self.assertEqual(extensional.form, IdealForm.extensional)
        self.assertEqual(extensional.order, 6)

    def testExtensionalValidation(self):
        """Test closure failures name the witness."""
        ring = makeZmod(6)
        self.assertEqual(extensionalIdeal(ring, [3, 0]).elements(), (0, 3))
        with self.assertRaises(IdealInvalidError) as cm:
            extensionalIdeal(ring, [0, 2])
        self.assertEqual(cm.exception.witness, [2, 2])
        with self.assertRaises(IdealInvalidError):
            extensionalIdeal(ring, [3])


class TestIdealLattice(unittest.TestCase):
    """Tests for enumerateIdealsOracle and maximalIdeals."""

    def testZmodLatticeMatchesDivisors(self):
        """Test Z/n has one ideal per divisor of n."""
        for n in range(2, 61):
            ideals = enumerateIdealsOracle(makeZmod(n))
            self.assertEqual(len(ideals), len(sympy.divisors(n)), n)

    def testSortedBySize(self):
        """Test ideals come sorted by order with (0) first and R last."""
        ring = makeZmod(12)
        ideals = enumerateIdealsOracle(ring)
        self.assertEqual([ideal.order for ideal in ideals], [1, 2, 3, 4, 6, 12])

    def testNonPrincipalSumsAppear(self):
        """Test F_2 × F_2 × F_2 has 8 ideals, most of them sums."""
        ring = makeFunctionRing(makePrimeField(2), 3)
        self.assertEqual(len(enumerateIdealsOracle(ring)), 8)

    def testMaximalIdeals(self):
        """Test the maximal ideals of Z/60 are 2Z, 3Z, 5Z."""
        ring = makeZmod(60)
        maximal = maximalIdeals(ring, enumerateIdealsOracle(ring))
        self.assertEqual(sorted(ideal.order for ideal in maximal), [12, 20, 30])

    def testOracleGuard(self):
        """Test the lattice oracle refuses rings above the oracle guard."""
        with self.assertRaises(SizeGuardError):
            enumerateIdealsOracle(makeZmod(300))
        self.assertEqual(len(enumerateIdealsOracle(makeZmod(300), guard=300)), 18)


class TestPRingOracle(unittest.TestCase):
    """Tests for isPRingOracle, isPIdeal and related oracles."""

    def testPrimeFieldPowers(self):
        """Test F_p^n is a p-ring and not a q-ring for q ≠ p."""
        ring = makeFunctionRing(makePrimeField(3), 2)
        report = isPRingOracle(ring, 3)
        self.assertTrue(report.verdict)
        self.assertEqual(report.method, Method.oracle)
        self.assertIsNone(report.witness)
        self.assertEqual(report.elementsChecked, 18)
        self.assertFalse(isPRingOracle(ring, 2).verdict)

    def testWitnessIsFirstFailure(self):
        """Test Z/4 fails x^2 = x first at 2."""
        report = isPRingOracle(makeZmod(4), 2)
        self.assertFalse(report.verdict)
        self.assertEqual(report.witness, 2)
        self.assertIn("x^2 = x", report.detail)

    def testSecondLawChecked(self):
        """Test Z/6 satisfies x^3 = x but fails 3x = 0 at 1."""
        report = isPRingOracle(makeZmod(6), 3)
        self.assertFalse(report.verdict)
        self.assertEqual(report.witness, 1)
        self.assertIn("3x = 0", report.detail)

    def testCompositePRejected(self):
        """Test p must be prime."""
        with self.assertRaises(NotPrimeError):
            isPRingOracle(makeZmod(4), 4)

    def testPrincipalIdealCriterion(self):
        """Test the principal-ideal criterion agrees with the elementwise oracle."""
        rings = [makeZmod(n) for n in range(2, 31)] + [makeQuotient(2, "x^2+x"), makeQuotient(3, "x^2")]
        for ring in rings:
            for p in (2, 3, 5):
                self.assertEqual(isPRingViaPrincipalIdeals(ring, p).verdict, isPRingOracle(ring, p).verdict, (str(ring), p))

    def testPIdeal(self):
        """Test 20Z/60Z is a 3-ideal and 15Z/60Z is not."""
        ring = makeZmod(60)
        self.assertTrue(isPIdeal(zmodIdeal(ring, 20), 3).verdict)
        self.assertFalse(isPIdeal(zmodIdeal(ring, 15), 2).verdict)

    def testPIdealsOfSixty(self):
        """Test the oracle finds {(0), 20Z/60Z} for p = 3."""
        ring = makeZmod(60)
        ideals = pIdealsOracle(ring, 3)
        self.assertEqual([ideal.order for ideal in ideals], [1, 3])
        self.assertEqual(ideals[1], zmodIdeal(ring, 20))

    def testHasNonzeroPIdeal(self):
        """Test the nonzero p-ideal oracle and its witness."""
        report = hasNonzeroPIdealOracle(makeZmod(60), 3)
        self.assertTrue(report.verdict)
        self.assertEqual(report.witness, 20)
        self.assertFalse(hasNonzeroPIdealOracle(makeZmod(60), 2).verdict)
        self.assertFalse(hasNonzeroPIdealOracle(makeQuotient(2, "x^2+1"), 2).verdict)


class TestVnrOracle(unittest.TestCase):
    """Tests for isVnrOracle."""

    def testSquarefreeModuli(self):
        """Test Z/n is regular iff n is squarefree."""
        for n in range(2, 101):
            expected = all(e == 1 for e in sympy.factorint(n).values())
            self.assertEqual(isVnrOracle(makeZmod(n)).verdict, expected, n)

    def testWitness(self):
        """Test the witness in Z/4 is 2."""
        report = isVnrOracle(makeZmod(4))
        self.assertEqual(report.witness, 2)
        self.assertEqual(report.elementsChecked, 3)

    def testGuard(self):
        """Test regularity uses the oracle guard."""
        with self.assertRaises(SizeGuardError):
            isVnrOracle(makeZmod(257))


class TestSweeps(unittest.TestCase):
    """Tests for partitioned sweeps."""

    def testPartition(self):
        """Test ranges cover [0, count) contiguously."""
        ranges = partition(10, 3)
        self.assertEqual([(r.start, r.stop) for r in ranges], [(0, 4), (4, 7), (7, 10)])
        self.assertEqual(len(partition(2, 8)), 2)

    def testWitnessIndependentOfWorkers(self):
        """Test the global minimum failure is found with any split."""
        failing = {17, 45, 88}
        for workers in (1, 2, 3, 7):
            self.assertEqual(sweepForWitness(100, lambda i: i not in failing, workers), 17)
        self.assertIsNone(sweepForWitness(100, lambda i: True, 4))

    def testOracleWithWorkers(self):
        """Test oracles report the same witness with several workers."""
        ring = makeZmod(36)
        self.assertEqual(isPRingOracle(ring, 2, workers=4).witness, isPRingOracle(ring, 2, workers=1).witness)
        self.assertEqual(isVnrOracle(ring, workers=3).witness, isVnrOracle(ring, workers=1).witness)


if __name__ == "__main__":
    unittest.main()
