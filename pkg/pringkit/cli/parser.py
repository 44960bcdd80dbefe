#!/usr/bin/env python3
"""
Recursive-descent parser for ring expressions.

    expr    := term ('*' term)*
    term    := primary ('[x]/(' poly ')')*
    primary := 'Z/' nat | 'GF(' nat ')' | '(' expr ')'
             | 'triv(' expr ',' module ')'
             | 'amalg(' expr ',' expr ',' hom ',' ideal ')'
             | 'dup(' expr ',' ideal ')'
             | 'fun(' expr ',' nat ')'
    module  := 'zero' | 'free:' nat | 'Z/' nat ':' path
    hom     := 'id' | 'scale0:' int | '@' path
    ideal   := '(' nat (',' nat)* ')'

Whitespace between tokens is ignored. Errors carry the UTF-8 byte offset
and the set of tokens that would have been accepted there.
"""

from typing import Iterable, List, Optional

from pringkit.core.errors import RingExprSyntaxError
from pringkit.cli.ringExpr import (
    AmalgNode,
    DupNode,
    FunNode,
    GFNode,
    HomSpec,
    IdealSpec,
    ModuleSpec,
    ProductNode,
    QuotientNode,
    RingExpr,
    TrivNode,
    ZmodNode,
)
from pringkit.poly.polyText import maxLiteral, parsePolyTerms

primaryStarts = ["'Z/'", "'GF('", "'('", "'triv('", "'amalg('", "'dup('", "'fun('"]
constructors = ("GF", "triv", "amalg", "dup", "fun")
pathStops = ",)"


class RingExprParser:
    """Single-use parser over one input string."""

    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def fail(self, message: str, expected: Iterable[str] = (), offset: Optional[int] = None) -> RingExprSyntaxError:
        return RingExprSyntaxError(message, self.pos if offset is None else offset, expected, self.text)

    def skipSpace(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skipSpace()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def atWord(self, word: str) -> bool:
        self.skipSpace()
        return self.text.startswith(word, self.pos)

    def take(self, token: str) -> bool:
        if self.atWord(token):
            self.pos += len(token)
            return True
        return False

    def expect(self, token: str) -> None:
        if not self.take(token):
            found = self.peek()
            message = f"unexpected '{found}'" if found else "unexpected end of input"
            raise self.fail(message, [f"'{token}'"])

    def nat(self) -> int:
        self.skipSpace()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if start == self.pos:
            found = self.peek()
            raise self.fail(f"unexpected '{found}'" if found else "unexpected end of input", ["natural number"])
        value = int(self.text[start:self.pos])
        if value > maxLiteral:
            raise self.fail("integer literal too large", [], offset=start)
        return value

    def signedInt(self) -> int:
        sign = -1 if self.take('-') else 1
        return sign * self.nat()

    def path(self) -> str:
        self.skipSpace()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos] not in pathStops:
            self.pos += 1
        value = self.text[start:self.pos].strip()
        if not value:
            raise self.fail("expected a table file path", ["path"], offset=start)
        return value

    # Grammar rules

    def parse(self) -> RingExpr:
        node = self.expr()
        if self.peek():
            raise self.fail(f"unexpected '{self.peek()}'", ["'*'", "'[x]/('", "end of input"])
        return node

    def expr(self) -> RingExpr:
        self.skipSpace()
        start = self.pos
        factors = [self.term()]
        while self.take('*'):
            factors.append(self.term())
        if len(factors) == 1:
            return factors[0]
        return ProductNode(tuple(factors), (start, self.pos))

    def term(self) -> RingExpr:
        self.skipSpace()
        start = self.pos
        node = self.primary()
        while self.atWord('['):
            for token in ("[", "x", "]", "/", "("):
                self.expect(token)
            polyStart = self.pos
            raw = self.polyText()
            parsePolyTerms(raw, polyStart)
            self.expect(')')
            node = QuotientNode(node, "".join(raw.split()), polyStart, (start, self.pos))
        return node

    def polyText(self) -> str:
        # Runs to the ')' that closes the quotient; tuple coefficients nest
        start = self.pos
        depth = 0
        while self.pos < len(self.text):
            char = self.text[self.pos]
            if char == '(':
                depth += 1
            elif char == ')':
                if depth == 0:
                    break
                depth -= 1
            self.pos += 1
        else:
            raise self.fail("unterminated polynomial", ["')'"])
        if not self.text[start:self.pos].strip():
            raise self.fail("empty polynomial", ["digit", "x", "("])
        return self.text[start:self.pos]

    def primary(self) -> RingExpr:
        self.skipSpace()
        start = self.pos
        if self.take('Z'):
            self.expect('/')
            return ZmodNode(self.nat(), (start, self.pos))
        for name in constructors:
            if self.atWord(name):
                self.pos += len(name)
                self.expect('(')
                return getattr(self, f"{name}Body")(start)
        if self.take('('):
            node = self.expr()
            self.expect(')')
            return node
        found = self.peek()
        raise self.fail(f"unexpected '{found}'" if found else "unexpected end of input", primaryStarts)

    def GFBody(self, start: int) -> GFNode:
        p = self.nat()
        self.expect(')')
        return GFNode(p, (start, self.pos))

    def trivBody(self, start: int) -> TrivNode:
        base = self.expr()
        self.expect(',')
        module = self.module()
        self.expect(')')
        return TrivNode(base, module, (start, self.pos))

    def amalgBody(self, start: int) -> AmalgNode:
        a = self.expr()
        self.expect(',')
        b = self.expr()
        self.expect(',')
        hom = self.hom()
        self.expect(',')
        ideal = self.ideal()
        self.expect(')')
        return AmalgNode(a, b, hom, ideal, (start, self.pos))

    def dupBody(self, start: int) -> DupNode:
        a = self.expr()
        self.expect(',')
        ideal = self.ideal()
        self.expect(')')
        return DupNode(a, ideal, (start, self.pos))

    def funBody(self, start: int) -> FunNode:
        base = self.expr()
        self.expect(',')
        size = self.nat()
        self.expect(')')
        return FunNode(base, size, (start, self.pos))

    def module(self) -> ModuleSpec:
        self.skipSpace()
        start = self.pos
        if self.take('zero'):
            return ModuleSpec("zero", span=(start, self.pos))
        if self.take('free'):
            self.expect(':')
            return ModuleSpec("free", rank=self.nat(), span=(start, self.pos))
        if self.take('Z'):
            self.expect('/')
            modulus = self.nat()
            self.expect(':')
            return ModuleSpec("cyclic", modulus=modulus, path=self.path(), span=(start, self.pos))
        raise self.fail("expected a module", ["'zero'", "'free:'", "'Z/'"])

    def hom(self) -> HomSpec:
        self.skipSpace()
        start = self.pos
        if self.take('id'):
            return HomSpec("id", span=(start, self.pos))
        if self.take('scale0'):
            self.expect(':')
            return HomSpec("scale0", scale=self.signedInt(), span=(start, self.pos))
        if self.take('@'):
            return HomSpec("table", path=self.path(), span=(start, self.pos))
        raise self.fail("expected a homomorphism", ["'id'", "'scale0:'", "'@'"])

    def ideal(self) -> IdealSpec:
        self.skipSpace()
        start = self.pos
        self.expect('(')
        generators: List[int] = [self.nat()]
        while self.take(','):
            generators.append(self.nat())
        self.expect(')')
        return IdealSpec(tuple(generators), (start, self.pos))


def parseRingExpr(text: str) -> RingExpr:
    """
    Parse a ring expression.

    Args:
        text: Expression such as "Z/60", "GF(2)[x]/(x^2+x+1)" or "dup(Z/4, (2))"

    Returns:
        The syntax tree

    Raises:
        RingExprSyntaxError: With the failing offset and the expected tokens
    """
    parser = RingExprParser(text)
    try:
        return parser.parse()
    except RingExprSyntaxError as e:
        if e.text:
            raise
        # Polynomial errors carry no source text yet
        raise RingExprSyntaxError(e.message, e.position, e.expected, text) from e


__all__ = [
    "RingExprParser",
    "parseRingExpr",
]
