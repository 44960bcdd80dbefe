#!/usr/bin/env python3
"""
Residue rings Z/nZ and prime fields F_p. Element index = residue.
"""

from typing import Any, Dict, Hashable

from pringkit.core.errors import InvalidParameterError
from pringkit.core.numberTheory import isPrime, requirePrime
from pringkit.rings.finiteRing import FiniteRing, RingFamily


class ZmodRing(FiniteRing):
    """The ring Z/nZ."""

    family = RingFamily.zmod

    def __init__(self, n: int):
        super().__init__(n)
        self.modulus = n

    @property
    def oneIndex(self) -> int:
        return 1

    def add(self, i: int, j: int) -> int:
        return (i + j) % self.modulus

    def neg(self, i: int) -> int:
        return (-i) % self.modulus

    def mul(self, i: int, j: int) -> int:
        return (i * j) % self.modulus

    def power(self, i: int, exponent: int) -> int:
        if exponent < 0:
            raise InvalidParameterError(f"exponent must be non-negative, got {exponent}")
        return pow(i, exponent, self.modulus)

    def intMul(self, k: int, i: int) -> int:
        return (k * i) % self.modulus

    def fromInteger(self, k: int) -> int:
        return k % self.modulus

    @property
    def characteristic(self) -> int:
        return self.modulus

    @property
    def params(self) -> Dict[str, Any]:
        return {"n": self.modulus}

    def describe(self) -> str:
        return f"Z/{self.modulus}"

    def signature(self) -> Hashable:
        return (self.family.value, self.modulus)


class PrimeFieldRing(ZmodRing):
    """The prime field F_p; same encoding as Z/pZ."""

    family = RingFamily.primeField

    def __init__(self, p: int):
        requirePrime(p)
        super().__init__(p)

    @property
    def prime(self) -> int:
        return self.modulus

    def inverse(self, i: int) -> int:
        if i % self.modulus == 0:
            raise InvalidParameterError("0 has no inverse")
        return pow(i, self.modulus - 2, self.modulus)

    @property
    def params(self) -> Dict[str, Any]:
        return {"p": self.modulus}

    def describe(self) -> str:
        return f"GF({self.modulus})"


def makeZmod(n: int) -> ZmodRing:
    """
    Build Z/nZ.

    Raises:
        InvalidParameterError: If n < 2
    """
    if not isinstance(n, int) or n < 2:
        raise InvalidParameterError(f"Z/nZ needs n ≥ 2, got {n}")
    return ZmodRing(n)


def makePrimeField(p: int) -> PrimeFieldRing:
    """
    Build F_p.

    Raises:
        NotPrimeError: If p is not prime
    """
    return PrimeFieldRing(p)


def isPrimeFieldLike(ring: FiniteRing) -> bool:
    """True for F_p, and for Z/pZ with p prime."""
    return isinstance(ring, ZmodRing) and isPrime(ring.modulus)


__all__ = [
    "ZmodRing",
    "PrimeFieldRing",
    "makeZmod",
    "makePrimeField",
    "isPrimeFieldLike",
]
