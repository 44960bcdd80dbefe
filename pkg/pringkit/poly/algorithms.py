#!/usr/bin/env python3
"""
Algorithms over F_p[x]: gcd, modular exponentiation, root finding with
multiplicities and factorization into monic irreducibles.
"""

from dataclasses import dataclass
from itertools import product as cartesian
from typing import Iterator, List, Tuple

from pringkit.core.errors import InvalidParameterError, UndefinedGcdError
from pringkit.poly.fpPoly import FpPoly


def requireNonConstant(f: FpPoly, what: str = "polynomial") -> FpPoly:
    """
    Raises:
        InvalidParameterError: If f is zero or constant
    """
    if not isinstance(f, FpPoly):
        raise InvalidParameterError(f"expected an FpPoly, got {type(f).__name__}")
    if f.isConstant():
        raise InvalidParameterError(f"{what} must have degree ≥ 1, got {f}")
    return f


def polyGcd(f: FpPoly, g: FpPoly) -> FpPoly:
    """
    Monic greatest common divisor by the Euclidean algorithm.

    Raises:
        UndefinedGcdError: If both inputs are zero
        ModulusMismatchError: If the inputs live over different primes
    """
    f._check(g)
    if f.isZero() and g.isZero():
        raise UndefinedGcdError(f"gcd(0, 0) over F_{f.p} is undefined")
    while not g.isZero():
        f, g = g, f % g
    return f.monic()


def powMod(base: FpPoly, exponent: int, modulus: FpPoly) -> FpPoly:
    """base^exponent mod modulus, reducing after every multiplication."""
    if exponent < 0:
        raise InvalidParameterError(f"exponent must be non-negative, got {exponent}")
    result = FpPoly.constant(base.p, 1) % modulus
    square = base % modulus
    while exponent:
        if exponent & 1:
            result = (result * square) % modulus
        square = (square * square) % modulus
        exponent >>= 1
    return result


def dividesXpMinusX(f: FpPoly) -> bool:
    """
    True iff f divides x^p - x, tested as x^p ≡ x (mod f).

    Raises:
        InvalidParameterError: If f is zero or constant
    """
    requireNonConstant(f)
    x = FpPoly.x(f.p)
    return powMod(x, f.p, f) == x % f


def isSquarefree(f: FpPoly) -> bool:
    """f has no repeated factor, i.e. gcd(f, f') is constant."""
    requireNonConstant(f)
    return polyGcd(f, f.derivative()).isConstant()


def rootsWithMultiplicity(f: FpPoly) -> List[Tuple[int, int]]:
    """
    Roots of f in F_p, ascending, each with its exact multiplicity.

    Raises:
        InvalidParameterError: If f is zero or constant
    """
    requireNonConstant(f)
    roots = []
    for a in range(f.p):
        if f.evaluate(a) != 0:
            continue
        linear = FpPoly.linear(f.p, a)
        multiplicity = 0
        remaining = f
        while not remaining.isZero():
            quotient, remainder = divmod(remaining, linear)
            if not remainder.isZero():
                break
            multiplicity += 1
            remaining = quotient
        roots.append((a, multiplicity))
    return roots


def simpleRoots(f: FpPoly) -> List[int]:
    return [a for a, multiplicity in rootsWithMultiplicity(f) if multiplicity == 1]


def monicPolynomials(p: int, degree: int) -> Iterator[FpPoly]:
    """Every monic polynomial of the given degree, in increasing coefficient order."""
    for lower in cartesian(range(p), repeat=degree):
        yield FpPoly(p, lower + (1,), checkPrime=False)


@dataclass(frozen=True)
class Factorization:
    """f = leadingCoefficient · Π factor^exponent."""
    leadingCoefficient: int
    factors: Tuple[Tuple[FpPoly, int], ...]

    def expand(self, p: int) -> FpPoly:
        result = FpPoly.constant(p, self.leadingCoefficient)
        for factor, exponent in self.factors:
            result = result * factor ** exponent
        return result

    def __iter__(self):
        return iter(self.factors)

    def __len__(self) -> int:
        return len(self.factors)


def factorIrreducible(f: FpPoly) -> Factorization:
    """
    Factor f into monic irreducibles by trial division.

    Candidate divisors are the monic polynomials of degree 1 up to deg f / 2,
    taken in increasing degree; any divisor found this way is irreducible
    because all smaller factors were removed first. Factors are sorted by
    their little-endian coefficient tuple.

    Raises:
        InvalidParameterError: If f is zero or constant
    """
    requireNonConstant(f)
    p = f.p
    lead = f.leadingCoefficient
    remaining = f.monic()
    found = {}
    degree = 1
    while 2 * degree <= remaining.degree:
        for candidate in monicPolynomials(p, degree):
            while True:
                quotient, remainder = divmod(remaining, candidate)
                if not remainder.isZero():
                    break
                found[candidate] = found.get(candidate, 0) + 1
                remaining = quotient
            if 2 * degree > remaining.degree:
                break
        degree += 1
    if not remaining.isConstant():
        found[remaining] = found.get(remaining, 0) + 1
    factors = tuple(sorted(found.items(), key=lambda item: item[0].sortKey()))
    return Factorization(lead, factors)


def isIrreducible(f: FpPoly) -> bool:
    factors = factorIrreducible(f).factors
    return len(factors) == 1 and factors[0][1] == 1


__all__ = [
    "requireNonConstant",
    "polyGcd",
    "powMod",
    "dividesXpMinusX",
    "isSquarefree",
    "rootsWithMultiplicity",
    "simpleRoots",
    "monicPolynomials",
    "Factorization",
    "factorIrreducible",
    "isIrreducible",
]
