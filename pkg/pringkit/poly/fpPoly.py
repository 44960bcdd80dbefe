#!/usr/bin/env python3
"""
Dense polynomials over the prime field F_p.

Coefficients are stored little-endian, reduced into [0, p), with no
trailing zeros; the zero polynomial has no coefficients and degree -inf.
"""

from enum import Enum
from typing import Iterable, Sequence, Tuple, Union

from pringkit.core.errors import InvalidParameterError, ModulusMismatchError, PolyDivisionError, RingExprSyntaxError
from pringkit.core.numberTheory import requirePrime
from pringkit.poly.polyText import parsePolyTerms

# Degree of the zero polynomial
zeroDegree = float('-inf')


def _strip(coeffs: Sequence[int], p: int) -> Tuple[int, ...]:
    reduced = [c % p for c in coeffs]
    while reduced and reduced[-1] == 0:
        reduced.pop()
    return tuple(reduced)


class FpPoly:
    """An immutable polynomial over F_p."""

    __slots__ = ("p", "coeffs")

    def __init__(self, p: int, coeffs: Iterable[int] = (), checkPrime: bool = True):
        if checkPrime:
            requirePrime(p)
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "coeffs", _strip(list(coeffs), p))

    def __setattr__(self, name, value):
        raise AttributeError("FpPoly is immutable")

    def _make(self, coeffs: Iterable[int]) -> "FpPoly":
        return FpPoly(self.p, coeffs, checkPrime=False)

    # Constructors

    @classmethod
    def zero(cls, p: int) -> "FpPoly":
        return cls(p, ())

    @classmethod
    def constant(cls, p: int, c: int) -> "FpPoly":
        return cls(p, (c,))

    @classmethod
    def x(cls, p: int) -> "FpPoly":
        return cls(p, (0, 1))

    @classmethod
    def monomial(cls, p: int, degree: int, c: int = 1) -> "FpPoly":
        if degree < 0:
            raise InvalidParameterError(f"monomial degree must be non-negative, got {degree}")
        return cls(p, [0] * degree + [c])

    @classmethod
    def linear(cls, p: int, root: int) -> "FpPoly":
        """The monic polynomial x - root."""
        return cls(p, (-root, 1))

    @classmethod
    def xpMinusX(cls, p: int) -> "FpPoly":
        return cls(p, [0, -1] + [0] * (p - 2) + [1])

    @classmethod
    def fromText(cls, p: int, text: str) -> "FpPoly":
        """
        Parse text such as "x^3+2x+1"; coefficients are reduced mod p.

        Raises:
            RingExprSyntaxError: On malformed text or tuple coefficients
        """
        requirePrime(p)
        coeffs = {}
        for term in parsePolyTerms(text):
            if isinstance(term.coefficient, tuple):
                raise RingExprSyntaxError("tuple coefficient in a polynomial over a prime field", term.offset, text=text)
            coeffs[term.exponent] = coeffs.get(term.exponent, 0) + term.coefficient
        top = max(coeffs) if coeffs else -1
        return cls(p, [coeffs.get(e, 0) for e in range(top + 1)], checkPrime=False)

    # Properties

    @property
    def degree(self) -> Union[int, float]:
        """Degree, or -inf for the zero polynomial."""
        return len(self.coeffs) - 1 if self.coeffs else zeroDegree

    @property
    def leadingCoefficient(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def isZero(self) -> bool:
        return not self.coeffs

    def isConstant(self) -> bool:
        return len(self.coeffs) <= 1

    def isMonic(self) -> bool:
        return self.leadingCoefficient == 1

    def coefficient(self, k: int) -> int:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    # Arithmetic

    def _check(self, other: "FpPoly") -> "FpPoly":
        if not isinstance(other, FpPoly):
            raise InvalidParameterError(f"expected an FpPoly, got {type(other).__name__}")
        if other.p != self.p:
            raise ModulusMismatchError(f"polynomials over F_{self.p} and F_{other.p}")
        return other

    def __add__(self, other: "FpPoly") -> "FpPoly":
        other = self._check(other)
        size = max(len(self.coeffs), len(other.coeffs))
        return self._make(self.coefficient(k) + other.coefficient(k) for k in range(size))

    def __neg__(self) -> "FpPoly":
        return self._make(-c for c in self.coeffs)

    def __sub__(self, other: "FpPoly") -> "FpPoly":
        return self + (-self._check(other))

    def __mul__(self, other: Union["FpPoly", int]) -> "FpPoly":
        if isinstance(other, int):
            return self._make(c * other for c in self.coeffs)
        other = self._check(other)
        if self.isZero() or other.isZero():
            return self._make(())
        product = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    product[i + j] += a * b
        return self._make(product)

    def __rmul__(self, other: int) -> "FpPoly":
        if isinstance(other, int):
            return self * other
        return NotImplemented

    def __divmod__(self, other: "FpPoly") -> Tuple["FpPoly", "FpPoly"]:
        other = self._check(other)
        if other.isZero():
            raise PolyDivisionError(f"division of {self} by the zero polynomial")
        p = self.p
        remainder = list(self.coeffs)
        divisorDegree = len(other.coeffs) - 1
        inverseLead = pow(other.coeffs[-1], p - 2, p)
        quotient = [0] * max(len(remainder) - divisorDegree, 0)
        for shift in range(len(remainder) - 1 - divisorDegree, -1, -1):
            factor = remainder[shift + divisorDegree] * inverseLead % p
            if factor:
                quotient[shift] = factor
                for k, c in enumerate(other.coeffs):
                    remainder[shift + k] = (remainder[shift + k] - factor * c) % p
        return self._make(quotient), self._make(remainder[:divisorDegree])

    def __floordiv__(self, other: "FpPoly") -> "FpPoly":
        return divmod(self, other)[0]

    def __mod__(self, other: "FpPoly") -> "FpPoly":
        return divmod(self, other)[1]

    def __pow__(self, exponent: int) -> "FpPoly":
        if exponent < 0:
            raise InvalidParameterError(f"exponent must be non-negative, got {exponent}")
        result = self._make((1,))
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def derivative(self) -> "FpPoly":
        """Formal derivative, coefficients k·a_k mod p."""
        return self._make(k * c for k, c in enumerate(self.coeffs) if k > 0)

    def evaluate(self, a: int) -> int:
        """f(a) in F_p, by Horner's rule."""
        value = 0
        for c in reversed(self.coeffs):
            value = (value * a + c) % self.p
        return value

    def __call__(self, a: int) -> int:
        return self.evaluate(a)

    def monic(self) -> "FpPoly":
        """Unit multiple with leading coefficient 1; the zero polynomial is returned unchanged."""
        if self.isZero():
            return self
        return self * pow(self.leadingCoefficient, self.p - 2, self.p)

    def divides(self, other: "FpPoly") -> bool:
        return (other % self).isZero()

    # Comparison and display

    def sortKey(self) -> Tuple[int, ...]:
        return self.coeffs

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FpPoly):
            return NotImplemented
        return self.p == other.p and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((self.p, self.coeffs))

    def __str__(self) -> str:
        return formatPoly(self.coeffs)

    def __repr__(self) -> str:
        return f"FpPoly({self.p}, {self})"


def formatPoly(coeffs: Sequence[int]) -> str:
    """Render little-endian coefficients as 'x^3+2x+1', highest degree first."""
    terms = []
    for k in range(len(coeffs) - 1, -1, -1):
        c = coeffs[k]
        if c == 0:
            continue
        if k == 0:
            terms.append(str(c))
            continue
        prefix = "" if c == 1 else str(c)
        terms.append(prefix + ("x" if k == 1 else f"x^{k}"))
    return "+".join(terms) if terms else "0"


class PolyOp(Enum):
    """Operations understood by polyArith."""
    add = "add"
    sub = "sub"
    mul = "mul"
    divmod = "divmod"
    derivative = "derivative"
    eval = "eval"


def polyArith(op: PolyOp, *args):
    """
    Apply one polynomial operation.

    Args:
        op: add(f, g), sub(f, g), mul(f, g), divmod(f, g), derivative(f) or eval(f, a)

    Returns:
        An FpPoly, a (quotient, remainder) pair for divmod, or an int in [0, p) for eval

    Raises:
        ModulusMismatchError: If the operands live over different primes
        PolyDivisionError: On division by the zero polynomial
    """
    op = PolyOp(op)
    arity = 1 if op is PolyOp.derivative else 2
    if len(args) != arity:
        raise InvalidParameterError(f"{op.value} takes {arity} arguments, got {len(args)}")
    f = args[0]
    if not isinstance(f, FpPoly):
        raise InvalidParameterError(f"expected an FpPoly, got {type(f).__name__}")

    if op is PolyOp.add:
        return f + args[1]
    if op is PolyOp.sub:
        return f - args[1]
    if op is PolyOp.mul:
        return f * f._check(args[1])
    if op is PolyOp.divmod:
        return divmod(f, args[1])
    if op is PolyOp.derivative:
        return f.derivative()
    return f.evaluate(int(args[1]))


__all__ = [
    "FpPoly",
    "PolyOp",
    "polyArith",
    "formatPoly",
    "zeroDegree",
]
