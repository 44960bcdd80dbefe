#!/usr/bin/env python3
"""
Integer helpers: primality, p-valuation, divisors.
"""

import math
from typing import Iterable, List

import sympy

from pringkit.core.errors import InvalidParameterError, NotPrimeError


def isPrime(n: int) -> bool:
    """Return True if n is prime."""
    return bool(sympy.isprime(n))


def requirePrime(p: int) -> int:
    """
    Validate that p is a prime integer.

    Returns:
        p, unchanged

    Raises:
        NotPrimeError: If p is not prime
    """
    if not isinstance(p, int) or isinstance(p, bool) or not isPrime(p):
        raise NotPrimeError(p)
    return p


def pValuation(n: int, p: int) -> int:
    """
    Exponent of the prime p in n.

    Raises:
        InvalidParameterError: If n is zero
    """
    requirePrime(p)
    if n == 0:
        raise InvalidParameterError("p-valuation of 0 is undefined")
    return int(sympy.multiplicity(p, abs(n)))


def _requirePositive(n: int) -> None:
    if n < 1:
        raise InvalidParameterError(f"expected a positive integer, got {n}")


def primeDivisors(n: int) -> List[int]:
    """Distinct prime divisors of n > 0, ascending."""
    _requirePositive(n)
    return sorted(int(q) for q in sympy.factorint(n))


def divisors(n: int) -> List[int]:
    """All positive divisors of n > 0, ascending."""
    _requirePositive(n)
    return [int(d) for d in sympy.divisors(n)]


def isSquarefreeInteger(n: int) -> bool:
    """True if no prime square divides n."""
    _requirePositive(n)
    return all(e == 1 for e in sympy.factorint(n).values())


def lcm(values: Iterable[int]) -> int:
    """Least common multiple of positive integers (1 for an empty iterable)."""
    return math.lcm(*values)


__all__ = [
    "isPrime",
    "requirePrime",
    "pValuation",
    "primeDivisors",
    "divisors",
    "isSquarefreeInteger",
    "lcm",
]
