#!/usr/bin/env python3
"""
Textual polynomial syntax shared by FpPoly and the ring expression language.

    poly  := ['+'|'-'] term (('+'|'-') term)*
    term  := coeff ['*'] ['x' ['^' nat]] | 'x' ['^' nat]
    coeff := nat | '(' int (',' int)* ')'

Whitespace is ignored. Tuple coefficients name one integer per factor of
a product coefficient ring. Offsets in errors are relative to the text.
"""

from dataclasses import dataclass
from typing import List, Tuple, Union

from pringkit.core.errors import RingExprSyntaxError

Coefficient = Union[int, Tuple[int, ...]]

# Literal cap, shared with the ring expression parser
maxLiteral = 2 ** 63 - 1


@dataclass(frozen=True)
class PolyTerm:
    """One signed term c·x^e of a polynomial literal."""
    coefficient: Coefficient
    exponent: int
    offset: int = 0


def negateCoefficient(c: Coefficient) -> Coefficient:
    if isinstance(c, tuple):
        return tuple(-v for v in c)
    return -c


class _PolyScanner:
    def __init__(self, text: str, baseOffset: int):
        self.text = text
        self.pos = 0
        self.baseOffset = baseOffset

    def fail(self, message: str, expected) -> RingExprSyntaxError:
        return RingExprSyntaxError(message, self.baseOffset + self.pos, expected)

    def skipSpace(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skipSpace()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def take(self, char: str) -> bool:
        if self.peek() == char:
            self.pos += 1
            return True
        return False

    def nat(self) -> int:
        self.skipSpace()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if start == self.pos:
            raise self.fail("expected a natural number", ["digit"])
        value = int(self.text[start:self.pos])
        if value > maxLiteral:
            self.pos = start
            raise self.fail("integer literal too large", [])
        return value

    def signedInt(self) -> int:
        sign = -1 if self.take('-') else 1
        return sign * self.nat()

    def coefficient(self) -> Coefficient:
        if self.take('('):
            values = [self.signedInt()]
            while self.take(','):
                values.append(self.signedInt())
            if not self.take(')'):
                raise self.fail("unterminated tuple coefficient", [",", ")"])
            return tuple(values)
        return self.nat()

    def monomial(self) -> int:
        if not self.take('x'):
            return 0
        if self.take('^'):
            return self.nat()
        return 1

    def term(self) -> Tuple[Coefficient, int]:
        nextChar = self.peek()
        if nextChar == 'x':
            return 1, self.monomial()
        if nextChar.isdigit() or nextChar == '(':
            coefficient = self.coefficient()
            hasStar = self.take('*')
            if self.peek() == 'x':
                return coefficient, self.monomial()
            if hasStar:
                raise self.fail("expected 'x' after '*'", ["x"])
            return coefficient, 0
        raise self.fail("expected a polynomial term", ["digit", "x", "("])

    def parse(self) -> List[PolyTerm]:
        terms = []
        sign = 1
        if self.take('-'):
            sign = -1
        else:
            self.take('+')
        while True:
            start = self.baseOffset + self.pos
            coefficient, exponent = self.term()
            if sign < 0:
                coefficient = negateCoefficient(coefficient)
            terms.append(PolyTerm(coefficient, exponent, start))
            if self.take('+'):
                sign = 1
            elif self.take('-'):
                sign = -1
            else:
                break
        if self.peek():
            raise self.fail(f"unexpected '{self.peek()}' in polynomial", ["+", "-"])
        return terms


def parsePolyTerms(text: str, baseOffset: int = 0) -> List[PolyTerm]:
    """
    Parse a polynomial literal into signed terms (repeated exponents are kept, not merged).

    Args:
        text: Polynomial text, e.g. "x^3+2x+1" or "(1,-1)+(0,1)x^2"
        baseOffset: Offset of text within a larger input, added to error offsets

    Raises:
        RingExprSyntaxError: On malformed input
    """
    return _PolyScanner(text, baseOffset).parse()


def formatCoefficient(c: Coefficient) -> str:
    if isinstance(c, tuple):
        return "(" + ",".join(str(v) for v in c) + ")"
    return str(c)


__all__ = [
    "Coefficient",
    "PolyTerm",
    "maxLiteral",
    "negateCoefficient",
    "parsePolyTerms",
    "formatCoefficient",
]
