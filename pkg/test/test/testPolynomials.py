#!/usr/bin/env python3
"""
Unit tests for polynomials over F_p.
Tests arithmetic, gcd, roots with multiplicity and factorization, with sympy as the oracle.
"""

import random
import sys
import unittest
from pathlib import Path

from sympy import GF as SympyGF, Poly, symbols

# Add project root to path
scriptDir = Path(__file__).parent.absolute()
sys.path.insert(0, str(scriptDir.parent.parent))

from pringkit.core.errors import (
    InvalidParameterError,
    ModulusMismatchError,
    NotPrimeError,
    PolyDivisionError,
    RingExprSyntaxError,
    UndefinedGcdError,
)
from pringkit.core.settings import getSettings
from pringkit.poly.algorithms import (
    dividesXpMinusX,
    factorIrreducible,
    isIrreducible,
    isSquarefree,
    monicPolynomials,
    polyGcd,
    powMod,
    rootsWithMultiplicity,
    simpleRoots,
)
from pringkit.poly.fpPoly import FpPoly, PolyOp, polyArith, zeroDegree
from pringkit.poly.polyText import parsePolyTerms

x = symbols('x')


def toSympy(f: FpPoly) -> Poly:
    return Poly(list(reversed(f.coeffs)) or [0], x, domain=SympyGF(f.p))


def fromSympy(poly: Poly, p: int) -> FpPoly:
    return FpPoly(p, [int(c) for c in reversed(poly.all_coeffs())])


def randomPoly(rng: random.Random, p: int, maxDegree: int) -> FpPoly:
    return FpPoly(p, [rng.randrange(p) for _ in range(rng.randint(1, maxDegree + 1))])


class TestFpPolyBasics(unittest.TestCase):
    """Tests for FpPoly construction and display."""

    def testNormalization(self):
        """Test coefficients are reduced and trailing zeros stripped."""
        f = FpPoly(3, [4, -1, 3, 0])
        self.assertEqual(f.coeffs, (1, 2))
        self.assertEqual(f.degree, 1)

    def testZeroPolynomial(self):
        """Test the zero polynomial has degree -inf."""
        zero = FpPoly.zero(5)
        self.assertTrue(zero.isZero())
        self.assertEqual(zero.degree, zeroDegree)
        self.assertEqual(str(zero), "0")

    def testRequiresPrime(self):
        """Test a composite modulus is rejected."""
        with self.assertRaises(NotPrimeError):
            FpPoly(4, [1, 1])

    def testFormatting(self):
        """Test highest-degree-first rendering."""
        self.assertEqual(str(FpPoly(5, [1, 2, 0, 1])), "x^3+2x+1")
        self.assertEqual(str(FpPoly.xpMinusX(3)), "x^3+2x")

    def testFromText(self):
        """Test parsing reduces coefficients mod p."""
        self.assertEqual(FpPoly.fromText(2, "x^2+x+1"), FpPoly(2, [1, 1, 1]))
        self.assertEqual(FpPoly.fromText(3, "x^3-x"), FpPoly(3, [0, 2, 0, 1]))
        self.assertEqual(FpPoly.fromText(5, "2*x^2 + 7"), FpPoly(5, [2, 0, 2]))
        self.assertEqual(FpPoly.fromText(2, "x+x"), FpPoly.zero(2))

    def testFromTextRejectsTuples(self):
        """Test tuple coefficients are not allowed over a prime field."""
        with self.assertRaises(RingExprSyntaxError):
            FpPoly.fromText(2, "(1,0)x+1")

    def testImmutable(self):
        """Test attributes cannot be reassigned."""
        f = FpPoly(2, [1, 1])
        with self.assertRaises(AttributeError):
            f.p = 3


class TestFpPolyArithmetic(unittest.TestCase):
    """Tests for polynomial arithmetic."""

    def testDivmodIdentity(self):
        """Test f = q·g + r with deg r < deg g on random inputs."""
        rng = random.Random(getSettings().randomSeed)
        for p in (2, 3, 5, 7):
            for _ in range(50):
                f = randomPoly(rng, p, 6)
                g = randomPoly(rng, p, 3)
                if g.isZero():
                    continue
                q, r = divmod(f, g)
                self.assertEqual(q * g + r, f)
                self.assertTrue(r.isZero() or r.degree < g.degree)

    def testDivisionByZero(self):
        """Test division by the zero polynomial raises."""
        with self.assertRaises(PolyDivisionError):
            divmod(FpPoly(3, [1, 1]), FpPoly.zero(3))

    def testModulusMismatch(self):
        """Test polynomials over different primes do not mix."""
        with self.assertRaises(ModulusMismatchError):
            _ = FpPoly(2, [1, 1]) + FpPoly(3, [1, 1])

    def testDerivativeInCharacteristicP(self):
        """Test d/dx x^p = 0 over F_p."""
        self.assertTrue(FpPoly.monomial(5, 5).derivative().isZero())
        self.assertEqual(FpPoly(5, [1, 2, 3]).derivative(), FpPoly(5, [2, 6]))

    def testEvaluate(self):
        """Test Horner evaluation."""
        f = FpPoly(7, [1, 0, 1])
        self.assertEqual(f.evaluate(3), 3)
        self.assertEqual(f(0), 1)

    def testPolyArith(self):
        """Test the polyArith dispatcher."""
        f = FpPoly(3, [1, 1])
        g = FpPoly(3, [2, 1])
        self.assertEqual(polyArith(PolyOp.add, f, g), FpPoly(3, [0, 2]))
        self.assertEqual(polyArith("sub", f, g), FpPoly(3, [2]))
        self.assertEqual(polyArith(PolyOp.mul, f, g), FpPoly(3, [2, 0, 1]))
        self.assertEqual(polyArith(PolyOp.divmod, f * g, g), (f, FpPoly.zero(3)))
        self.assertEqual(polyArith(PolyOp.derivative, f * g), FpPoly(3, [0, 2]))
        self.assertEqual(polyArith(PolyOp.eval, g, 1), 0)
        with self.assertRaises(InvalidParameterError):
            polyArith(PolyOp.derivative, f, g)


class TestGcdAndRoots(unittest.TestCase):
    """Tests for polyGcd, powMod, roots and squarefreeness."""

    def testGcdIsMonic(self):
        """Test gcd((x-1)(x-2), 2(x-1)) = x-1 over F_5."""
        f = FpPoly.linear(5, 1) * FpPoly.linear(5, 2)
        g = FpPoly.linear(5, 1) * 2
        self.assertEqual(polyGcd(f, g), FpPoly.linear(5, 1))

    def testGcdOfZeros(self):
        """Test gcd(0, 0) is undefined."""
        with self.assertRaises(UndefinedGcdError):
            polyGcd(FpPoly.zero(3), FpPoly.zero(3))

    def testGcdAgreesWithSympy(self):
        """Test gcd against sympy over several primes."""
        rng = random.Random(getSettings().randomSeed + 1)
        for p in (2, 3, 5):
            for _ in range(40):
                f = randomPoly(rng, p, 5)
                g = randomPoly(rng, p, 5)
                if f.isZero() and g.isZero():
                    continue
                expected = fromSympy(toSympy(f).gcd(toSympy(g)), p).monic()
                self.assertEqual(polyGcd(f, g), expected, (f, g))

    def testPowMod(self):
        """Test x^p ≡ x modulo x^p - x."""
        for p in (2, 3, 5):
            modulus = FpPoly.xpMinusX(p)
            self.assertEqual(powMod(FpPoly.x(p), p, modulus), FpPoly.x(p))

    def testDividesXpMinusX(self):
        """Test divisibility of x^p - x."""
        self.assertTrue(dividesXpMinusX(FpPoly.fromText(3, "x^3-x")))
        self.assertTrue(dividesXpMinusX(FpPoly.fromText(3, "x^2-1")))
        self.assertFalse(dividesXpMinusX(FpPoly.fromText(2, "x^2+1")))
        self.assertFalse(dividesXpMinusX(FpPoly.fromText(2, "x^2+x+1")))
        with self.assertRaises(InvalidParameterError):
            dividesXpMinusX(FpPoly.constant(2, 1))

    def testRootsWithMultiplicity(self):
        """Test (x-1)^2 (x-2) over F_3."""
        f = FpPoly.linear(3, 1) ** 2 * FpPoly.linear(3, 2)
        self.assertEqual(rootsWithMultiplicity(f), [(1, 2), (2, 1)])
        self.assertEqual(simpleRoots(f), [2])

    def testRootsOfXSquaredPlusOne(self):
        """Test x^2+1 = (x+1)^2 over F_2 has a double root."""
        self.assertEqual(rootsWithMultiplicity(FpPoly.fromText(2, "x^2+1")), [(1, 2)])
        self.assertEqual(rootsWithMultiplicity(FpPoly.fromText(2, "x^2+x+1")), [])

    def testSquarefree(self):
        """Test squarefreeness by gcd(f, f')."""
        self.assertTrue(isSquarefree(FpPoly.fromText(3, "x^3-x")))
        self.assertFalse(isSquarefree(FpPoly.fromText(2, "x^2+1")))


class TestFactorization(unittest.TestCase):
    """Tests for factorIrreducible."""

    def testKnownFactorization(self):
        """Test x^3 - x = x(x+1)(x+2) over F_3."""
        factorization = factorIrreducible(FpPoly.fromText(3, "x^3-x"))
        self.assertEqual(factorization.leadingCoefficient, 1)
        self.assertEqual([str(g) for g, _ in factorization], ["x", "x+1", "x+2"])
        self.assertEqual([m for _, m in factorization], [1, 1, 1])

    def testLeadingCoefficientKept(self):
        """Test non-monic input keeps its leading coefficient."""
        f = FpPoly(5, [2, 0, 2])
        factorization = factorIrreducible(f)
        self.assertEqual(factorization.leadingCoefficient, 2)
        self.assertEqual(factorization.expand(5), f)

    def testIrreducibility(self):
        """Test irreducibles of small degree."""
        self.assertTrue(isIrreducible(FpPoly.fromText(2, "x^2+x+1")))
        self.assertFalse(isIrreducible(FpPoly.fromText(2, "x^2+1")))
        self.assertTrue(isIrreducible(FpPoly.fromText(3, "x^2+1")))

    def testAgreesWithSympy(self):
        """Test every monic polynomial of degree ≤ 4 over F_2 and F_3 against sympy."""
        for p in (2, 3):
            for degree in range(1, 5):
                for f in monicPolynomials(p, degree):
                    ours = factorIrreducible(f)
                    self.assertEqual(ours.expand(p), f)
                    _, theirs = toSympy(f).factor_list()
                    expected = sorted(
                        ((fromSympy(g, p).monic(), m) for g, m in theirs),
                        key=lambda item: item[0].sortKey(),
                    )
                    self.assertEqual(list(ours.factors), expected, str(f))

    def testDividesXpMinusXMeansDistinctLinearFactors(self):
        """Test f | x^p - x iff every irreducible factor is linear with exponent 1, deg f ≤ 4."""
        for p in (2, 3, 5):
            for degree in range(1, 5):
                for f in monicPolynomials(p, degree):
                    distinctLinear = all(g.degree == 1 and m == 1 for g, m in factorIrreducible(f))
                    self.assertEqual(dividesXpMinusX(f), distinctLinear, (p, str(f)))

    def testSquarefreeAgreesWithMultiplicities(self):
        """Test isSquarefree against factor exponents and root multiplicities, deg f ≤ 4."""
        for p in (2, 3, 5):
            for degree in range(1, 5):
                for f in monicPolynomials(p, degree):
                    factorization = factorIrreducible(f)
                    squarefree = isSquarefree(f)
                    self.assertEqual(squarefree, all(m == 1 for _, m in factorization), (p, str(f)))
                    linear = sorted(((-g.coeffs[0]) % p, m) for g, m in factorization if g.degree == 1)
                    roots = rootsWithMultiplicity(f)
                    self.assertEqual(roots, linear, (p, str(f)))
                    if squarefree:
                        self.assertTrue(all(m == 1 for _, m in roots), (p, str(f)))


class TestPolyText(unittest.TestCase):
    """Tests for the shared polynomial text syntax."""

    def testTermsKeepOffsets(self):
        """Test each term records where it starts."""
        terms = parsePolyTerms("x^2 + 3x - 1", 10)
        self.assertEqual([(t.coefficient, t.exponent) for t in terms], [(1, 2), (3, 1), (-1, 0)])
        self.assertEqual(terms[0].offset, 10)

    def testTupleCoefficients(self):
        """Test tuple coefficients and their negation."""
        terms = parsePolyTerms("(1,-1)-(0,2)x^3")
        self.assertEqual(terms[0].coefficient, (1, -1))
        self.assertEqual(terms[1].coefficient, (0, -2))
        self.assertEqual(terms[1].exponent, 3)

    def testErrorOffset(self):
        """Test a stray character is reported at its offset."""
        with self.assertRaises(RingExprSyntaxError) as cm:
            parsePolyTerms("x^2+*", 5)
        self.assertEqual(cm.exception.offset, 9)

    def testStarNeedsX(self):
        """Test '3*' must be followed by x."""
        with self.assertRaises(RingExprSyntaxError):
            parsePolyTerms("3*")


if __name__ == "__main__":
    unittest.main()
