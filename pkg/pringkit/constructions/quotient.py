#!/usr/bin/env python3
"""
Quotient rings F_p[x]/(f) and R[x]/(f) over finite p-rings R.

F_p[x]/(f) is materialized directly: element index = little-endian base-p
digits of the residue polynomial. R[x]/(f) is only ever represented
through a decomposition R ≅ F_p^n, as the product of the component
quotients F_p[x]/(f_j).
"""

from dataclasses import dataclass
from typing import Any, Dict, Hashable, Iterable, List, Optional, Sequence, Tuple, Union

from pringkit.core.errors import (
    DegenerateInputError,
    InvalidParameterError,
    ModulusMismatchError,
    PreconditionError,
    RingExprSyntaxError,
    RingMismatchError,
)
from pringkit.core.logging import printVerbose
from pringkit.core.numberTheory import requirePrime
from pringkit.core.settings import requireWithinGuard
from pringkit.poly.algorithms import dividesXpMinusX, requireNonConstant, rootsWithMultiplicity
from pringkit.poly.fpPoly import FpPoly
from pringkit.poly.polyText import parsePolyTerms
from pringkit.rings.finiteRing import Element, FiniteRing, RingFamily
from pringkit.rings.homomorphism import RingHom, TableHom, makeHom
from pringkit.rings.product import ProductRing, makeProduct
from pringkit.rings.zmod import isPrimeFieldLike, makePrimeField


class QuotientRing(FiniteRing):
    """The ring F_p[x]/(f) for a monic f of degree ≥ 1."""

    family = RingFamily.quotient

    def __init__(self, p: int, modulus: FpPoly):
        self.p = p
        self.modulus = modulus
        self.degree = int(modulus.degree)
        super().__init__(p ** self.degree)

    def decodePoly(self, index: int) -> FpPoly:
        """Residue polynomial of the element with the given index."""
        digits = []
        for _ in range(self.degree):
            index, digit = divmod(index, self.p)
            digits.append(digit)
        return FpPoly(self.p, digits, checkPrime=False)

    def encodePoly(self, poly: FpPoly) -> int:
        """Index of the residue class of poly."""
        if poly.p != self.p:
            raise ModulusMismatchError(f"polynomial over F_{poly.p} used in {self}")
        residue = poly % self.modulus
        index = 0
        for c in reversed(residue.coeffs):
            index = index * self.p + c
        return index

    @property
    def oneIndex(self) -> int:
        return 1

    @property
    def xIndex(self) -> int:
        """Index of the class of x."""
        return self.encodePoly(FpPoly.x(self.p))

    def add(self, i: int, j: int) -> int:
        index = 0
        weight = 1
        for _ in range(self.degree):
            i, a = divmod(i, self.p)
            j, b = divmod(j, self.p)
            index += ((a + b) % self.p) * weight
            weight *= self.p
        return index

    def neg(self, i: int) -> int:
        index = 0
        weight = 1
        for _ in range(self.degree):
            i, a = divmod(i, self.p)
            index += ((-a) % self.p) * weight
            weight *= self.p
        return index

    def mul(self, i: int, j: int) -> int:
        return self.encodePoly(self.decodePoly(i) * self.decodePoly(j))

    def fromInteger(self, k: int) -> int:
        return k % self.p

    @property
    def characteristic(self) -> int:
        return self.p

    @property
    def params(self) -> Dict[str, Any]:
        return {"p": self.p, "modulus": str(self.modulus)}

    def describe(self) -> str:
        return f"GF({self.p})[x]/({self.modulus})"

    def signature(self) -> Hashable:
        return (self.family.value, self.p, self.modulus.coeffs)

    def formatElement(self, i: int) -> str:
        return str(self.decodePoly(i))


def makeQuotient(p: int, f: Union[FpPoly, str], guard: Optional[int] = None) -> QuotientRing:
    """
    Build F_p[x]/(f), scaling f monic first.

    Args:
        p: Prime
        f: Modulus polynomial, or its text
        guard: Size guard override

    Raises:
        NotPrimeError: If p is not prime
        InvalidParameterError: If f is zero or constant
        SizeGuardError: If p^deg f exceeds the guard
    """
    requirePrime(p)
    if isinstance(f, str):
        f = FpPoly.fromText(p, f)
    if f.p != p:
        raise ModulusMismatchError(f"modulus lives over F_{f.p}, not F_{p}")
    requireNonConstant(f, "quotient modulus")
    requireWithinGuard(p ** int(f.degree), guard, what=f"GF({p})[x]/({f.monic()})")
    return QuotientRing(p, f.monic())


def evaluationHom(quotient: QuotientRing) -> TableHom:
    """
    The map g ↦ (g(a_1), ..., g(a_d)) into F_p^d at the roots of the modulus.

    Raises:
        PreconditionError: If the modulus does not split with distinct roots
    """
    p, f = quotient.p, quotient.modulus
    roots = [a for a, _ in rootsWithMultiplicity(f)]
    if not dividesXpMinusX(f) or len(roots) != quotient.degree:
        raise PreconditionError(f"{f} does not split with distinct roots over F_{p}")
    field = makePrimeField(p)
    target = makeProduct([field] * len(roots))
    table = [target.encode([quotient.decodePoly(i).evaluate(a) for a in roots]) for i in quotient.indices()]
    return makeHom(quotient, target, table)


class PolyOverRing:
    """A polynomial with coefficients in a finite ring, stored as little-endian element indices."""

    __slots__ = ("ring", "coeffs")

    def __init__(self, ring: FiniteRing, coeffs: Iterable[Union[int, Element]] = ()):
        indices = []
        for c in coeffs:
            if isinstance(c, Element):
                if c.ring != ring:
                    raise RingMismatchError(f"coefficient from {c.ring} in a polynomial over {ring}")
                c = c.index
            if not 0 <= c < ring.order:
                raise InvalidParameterError(f"coefficient index {c} outside [0, {ring.order})")
            indices.append(c)
        while indices and indices[-1] == 0:
            indices.pop()
        object.__setattr__(self, "ring", ring)
        object.__setattr__(self, "coeffs", tuple(indices))

    def __setattr__(self, name, value):
        raise AttributeError("PolyOverRing is immutable")

    @classmethod
    def fromText(cls, ring: FiniteRing, text: str, baseOffset: int = 0) -> "PolyOverRing":
        """
        Parse a polynomial with integer or tuple coefficients.

        Tuple coefficients bind to the factors of a product ring in order;
        integer coefficients c mean c·1.

        Raises:
            RingExprSyntaxError: On malformed text or a tuple of the wrong arity
        """
        coeffs: Dict[int, int] = {}
        for term in parsePolyTerms(text, baseOffset):
            if isinstance(term.coefficient, tuple):
                if not isinstance(ring, ProductRing) or len(ring.factors) != len(term.coefficient):
                    arity = len(ring.factors) if isinstance(ring, ProductRing) else 1
                    raise RingExprSyntaxError(
                        f"tuple coefficient has {len(term.coefficient)} entries, {ring} has {arity} factor(s)",
                        term.offset,
                    )
                value = ring.encode([f.fromInteger(c) for f, c in zip(ring.factors, term.coefficient)])
            else:
                value = ring.fromInteger(term.coefficient)
            coeffs[term.exponent] = ring.add(coeffs.get(term.exponent, 0), value)
        top = max(coeffs) if coeffs else -1
        return cls(ring, [coeffs.get(e, 0) for e in range(top + 1)])

    @property
    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else float('-inf')

    @property
    def coefficients(self) -> Tuple[Element, ...]:
        return tuple(Element(self.ring, c) for c in self.coeffs)

    def isZero(self) -> bool:
        return not self.coeffs

    def _check(self, other: "PolyOverRing") -> "PolyOverRing":
        if not isinstance(other, PolyOverRing) or other.ring != self.ring:
            raise RingMismatchError(f"polynomials over {self.ring} and {getattr(other, 'ring', other)}")
        return other

    def __add__(self, other: "PolyOverRing") -> "PolyOverRing":
        other = self._check(other)
        size = max(len(self.coeffs), len(other.coeffs))
        left = self.coeffs + (0,) * (size - len(self.coeffs))
        right = other.coeffs + (0,) * (size - len(other.coeffs))
        return PolyOverRing(self.ring, [self.ring.add(a, b) for a, b in zip(left, right)])

    def __mul__(self, other: "PolyOverRing") -> "PolyOverRing":
        other = self._check(other)
        if self.isZero() or other.isZero():
            return PolyOverRing(self.ring)
        ring = self.ring
        product = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                product[i + j] = ring.add(product[i + j], ring.mul(a, b))
        return PolyOverRing(ring, product)

    def __pow__(self, exponent: int) -> "PolyOverRing":
        if exponent < 0:
            raise InvalidParameterError(f"exponent must be non-negative, got {exponent}")
        result = PolyOverRing(self.ring, [self.ring.oneIndex])
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def substituteXPower(self, k: int) -> "PolyOverRing":
        """g(x^k)."""
        if k < 1:
            raise InvalidParameterError(f"substitution power must be positive, got {k}")
        spread = [0] * (k * (len(self.coeffs) - 1) + 1) if self.coeffs else []
        for i, c in enumerate(self.coeffs):
            spread[k * i] = c
        return PolyOverRing(self.ring, spread)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PolyOverRing):
            return NotImplemented
        return self.ring == other.ring and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((self.ring, self.coeffs))

    def __str__(self) -> str:
        terms = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            text = self.ring.formatElement(c)
            if k == 0:
                terms.append(text)
            else:
                prefix = "" if c == self.ring.oneIndex else text
                terms.append(prefix + ("x" if k == 1 else f"x^{k}"))
        return "+".join(terms) if terms else "0"

    def __repr__(self) -> str:
        return f"PolyOverRing({self.ring}, {self})"


def reduceModMaximal(f: PolyOverRing, proj: RingHom) -> FpPoly:
    """
    Reduce f modulo the kernel of a projection R → F_p, coefficientwise.

    Raises:
        InvalidParameterError: If the projection target is not a prime field
        RingMismatchError: If the projection does not start at f's ring
    """
    if proj.source != f.ring:
        raise RingMismatchError(f"projection from {proj.source} applied to a polynomial over {f.ring}")
    if not isPrimeFieldLike(proj.target):
        raise InvalidParameterError(f"projection target {proj.target} is not a prime field")
    return FpPoly(proj.target.modulus, [proj.image(c) for c in f.coeffs], checkPrime=False)


@dataclass(frozen=True)
class QuotientDecomposition:
    """R[x]/(f) split along R ≅ F_p^n into F_p[x]/(f_1) × ... × F_p[x]/(f_n), not materialized."""
    poly: PolyOverRing
    projections: Tuple[RingHom, ...]
    reduced: Tuple[FpPoly, ...]

    @property
    def p(self) -> int:
        return self.projections[0].target.modulus

    @property
    def predictedOrder(self) -> int:
        """p^(Σ deg f_j)."""
        return self.p ** sum(int(f.degree) for f in self.reduced)

    @property
    def nontrivial(self) -> List[Tuple[int, FpPoly]]:
        """(j, f_j) for every non-constant reduction; a unit f_j contributes the zero ring."""
        return [(j, f) for j, f in enumerate(self.reduced) if not f.isConstant()]

    @property
    def units(self) -> List[int]:
        return [j for j, f in enumerate(self.reduced) if f.isConstant()]

    def componentDescriptions(self) -> List[str]:
        return [f"GF({self.p})[x]/({f.monic()})" for f in self.reduced]


def decomposeQuotient(f: PolyOverRing, projections: Sequence[RingHom]) -> QuotientDecomposition:
    """
    Reduce f along every projection.

    Raises:
        InvalidParameterError: If no projection is given or the targets differ in p
        DegenerateInputError: If some f_j is zero, which gives an infinite component
    """
    if not projections:
        raise InvalidParameterError("a decomposition needs at least one projection")
    reduced = tuple(reduceModMaximal(f, proj) for proj in projections)
    primes = {proj.target.modulus for proj in projections}
    if len(primes) != 1:
        raise InvalidParameterError(f"projections land in different prime fields: {sorted(primes)}")
    for j, fj in enumerate(reduced):
        if fj.isZero():
            raise DegenerateInputError(f"f reduces to 0 in component {j}")
    return QuotientDecomposition(f, tuple(projections), reduced)


def predictedQuotientOrder(f: PolyOverRing, projections: Sequence[RingHom]) -> int:
    return decomposeQuotient(f, projections).predictedOrder


class PRingPolyQuotient(ProductRing):
    """R[x]/(f), held as the product of its component quotients."""

    def __init__(self, decomposition: QuotientDecomposition, components: Sequence[QuotientRing]):
        super().__init__(components)
        self.decomposition = decomposition
        self.baseRing = decomposition.poly.ring

    def describe(self) -> str:
        return f"({self.baseRing.describe()})[x]/({self.decomposition.poly})"

    @property
    def params(self) -> Dict[str, Any]:
        return {
            "base": self.baseRing.describe(),
            "poly": str(self.decomposition.poly),
            "components": [q.describe() for q in self.factors],
        }


def makeQuotientOverPRing(ring: FiniteRing, f: PolyOverRing, decomposition: Sequence[RingHom], guard: Optional[int] = None) -> FiniteRing:
    """
    Build R[x]/(f) as Π F_p[x]/(f_j) along R ≅ F_p^n.

    Components where f_j is a unit are the zero ring and drop out of the
    product. With a single remaining component the result is that quotient
    F_p[x]/(f_j) itself.

    Raises:
        RingMismatchError: If f is not over `ring`
        DegenerateInputError: If some f_j is zero, or every f_j is a unit so that R[x]/(f) = 0
        SizeGuardError: If the predicted order exceeds the guard
    """
    if f.ring != ring:
        raise RingMismatchError(f"polynomial over {f.ring} used with {ring}")
    plan = decomposeQuotient(f, decomposition)
    requireWithinGuard(plan.predictedOrder, guard, what=f"({ring})[x]/({f})")
    if not plan.nontrivial:
        raise DegenerateInputError(f"({ring})[x]/({f}) is the zero ring: f is a unit in every component")
    components = [makeQuotient(plan.p, fj, guard) for _, fj in plan.nontrivial]
    printVerbose(f"({ring})[x]/({f}) splits into {len(components)} component quotient(s)")
    if len(components) == 1:
        return components[0]
    return PRingPolyQuotient(plan, components)


def eightNPlusOneExample(p: int) -> PolyOverRing:
    """
    f = (1,-1,2,-2) + (0,0,1,1)x^2 + (1,1,0,0)x^n over F_p^4, for a prime p = 8n+1.

    Colliding monomials (n ≤ 2) have their coefficients summed.

    Raises:
        InvalidParameterError: If p is not a prime of the form 8n+1
    """
    requirePrime(p)
    if p % 8 != 1:
        raise InvalidParameterError(f"{p} is not of the form 8n+1")
    n = (p - 1) // 8
    ring = makeProduct([makePrimeField(p)] * 4)
    return PolyOverRing.fromText(ring, eightNPlusOneText(n))


def eightNPlusOneText(n: int) -> str:
    return f"(1,-1,2,-2)+(0,0,1,1)x^2+(1,1,0,0)x^{n}"


__all__ = [
    "QuotientRing",
    "makeQuotient",
    "evaluationHom",
    "PolyOverRing",
    "reduceModMaximal",
    "QuotientDecomposition",
    "decomposeQuotient",
    "predictedQuotientOrder",
    "PRingPolyQuotient",
    "makeQuotientOverPRing",
    "eightNPlusOneExample",
    "eightNPlusOneText",
]
