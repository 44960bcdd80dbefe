#!/usr/bin/env python3
"""
Single entry point for the pringkit public API.
Scripts and tests outside of pringkit/ should import from this module.
"""

# Logging
from pringkit.core.logging import (
    Colours,
    Verbosity,
    safePrint,
    printInfo,
    printWarning,
    printError,
    printSuccess,
    printVerbose,
    printH2,
    setVerbosity,
    getVerbosity,
    setVerbosityFromArgs,
    setShowConsoleTimestamps,
    getShowConsoleTimestamps,
)

# Errors
from pringkit.core.errors import (
    RingKitError,
    InvalidParameterError,
    NotPrimeError,
    BaseMismatchError,
    RingMismatchError,
    ModulusMismatchError,
    PolyDivisionError,
    UndefinedGcdError,
    WitnessError,
    HomInvalidError,
    IdealInvalidError,
    IdentityConditionError,
    ModuleActionError,
    PreconditionError,
    DegenerateInputError,
    TableFileError,
    SizeGuardError,
    InternalInconsistencyError,
    RingExprSyntaxError,
)

# Settings and number theory
from pringkit.core.settings import (
    Settings,
    getSettings,
    setSettings,
    loadSettings,
    requireWithinGuard,
    requireWithinOracleGuard,
)
from pringkit.core.numberTheory import (
    isPrime,
    requirePrime,
    pValuation,
    primeDivisors,
    divisors,
)

# Rings
from pringkit.rings.finiteRing import (
    RingFamily,
    FiniteRing,
    Element,
)
from pringkit.rings.zmod import (
    ZmodRing,
    PrimeFieldRing,
    makeZmod,
    makePrimeField,
)
from pringkit.rings.product import (
    ProductRing,
    makeProduct,
    makeFunctionRing,
)
from pringkit.rings.arithmetic import (
    ArithOp,
    ringArith,
    enumerateElements,
    verifyRingAxioms,
)
from pringkit.rings.homomorphism import (
    RingHom,
    TableHom,
    ComponentProjection,
    HomReport,
    verifyHom,
    makeHom,
    identityHom,
    scaleFirstHom,
    crtHom,
    loadHomTable,
)

# Polynomials over F_p
from pringkit.poly.fpPoly import (
    FpPoly,
    PolyOp,
    polyArith,
)
from pringkit.poly.algorithms import (
    polyGcd,
    powMod,
    dividesXpMinusX,
    isSquarefree,
    rootsWithMultiplicity,
    simpleRoots,
    Factorization,
    factorIrreducible,
    isIrreducible,
)

# Constructions
from pringkit.constructions.quotient import (
    QuotientRing,
    makeQuotient,
    evaluationHom,
    PolyOverRing,
    reduceModMaximal,
    decomposeQuotient,
    predictedQuotientOrder,
    makeQuotientOverPRing,
    eightNPlusOneExample,
)
from pringkit.constructions.modules import (
    ModuleDesc,
    zeroModule,
    freeModule,
    cyclicModule,
    loadActionTable,
)
from pringkit.constructions.trivialExtension import (
    TrivialExtensionRing,
    makeTrivialExtension,
)
from pringkit.constructions.amalgamation import (
    AmalgDesc,
    AmalgamationRing,
    makeAmalgamation,
    makeDuplication,
    makeScaledAmalgamationExample,
)

# Decisions
from pringkit.decision.ideals import (
    IdealForm,
    IdealDesc,
    principalIdeal,
    idealSum,
    generatedIdeal,
    zeroIdeal,
    unitIdeal,
    zmodIdeal,
    quotientIdeal,
    productIdeal,
    enumerateIdealsOracle,
    maximalIdeals,
)
from pringkit.decision.report import (
    Method,
    DecisionReport,
)
from pringkit.decision.oracles import (
    isPRingOracle,
    isVnrOracle,
    isPIdeal,
    isPRingViaPrincipalIdeals,
)
from pringkit.decision.mccoy import (
    McCoyDecomposition,
    mccoyDecompose,
    productDecomposition,
)
from pringkit.decision.fastPaths import (
    CheckMode,
    pIdealsOfZmod,
    pIdealTableOfZmod,
    quotientHasPIdeal,
    pIdealsOfQuotient,
    pRingVnrCertificate,
    pringPolyQuotientIsPRing,
    amalgamationIsPRing,
    trivialExtCheck,
    irreduciblePowerStatements,
)

# Command line
from pringkit.cli.ringExpr import formatRingExpr
from pringkit.cli.parser import parseRingExpr
from pringkit.cli.evaluator import evaluateRingExpr
from pringkit.cli.commands import Command, CommandResult, runCommand

from pringkit.version import __version__


__all__ = [
    # Logging
    "Colours",
    "Verbosity",
    "safePrint",
    "printInfo",
    "printWarning",
    "printError",
    "printSuccess",
    "printVerbose",
    "printH2",
    "setVerbosity",
    "getVerbosity",
    "setVerbosityFromArgs",
    "setShowConsoleTimestamps",
    "getShowConsoleTimestamps",
    # Errors
    "RingKitError",
    "InvalidParameterError",
    "NotPrimeError",
    "BaseMismatchError",
    "RingMismatchError",
    "ModulusMismatchError",
    "PolyDivisionError",
    "UndefinedGcdError",
    "WitnessError",
    "HomInvalidError",
    "IdealInvalidError",
    "IdentityConditionError",
    "ModuleActionError",
    "PreconditionError",
    "DegenerateInputError",
    "TableFileError",
    "SizeGuardError",
    "InternalInconsistencyError",
    "RingExprSyntaxError",
    # Settings and number theory
    "Settings",
    "getSettings",
    "setSettings",
    "loadSettings",
    "requireWithinGuard",
    "requireWithinOracleGuard",
    "isPrime",
    "requirePrime",
    "pValuation",
    "primeDivisors",
    "divisors",
    # Rings
    "RingFamily",
    "FiniteRing",
    "Element",
    "ZmodRing",
    "PrimeFieldRing",
    "makeZmod",
    "makePrimeField",
    "ProductRing",
    "makeProduct",
    "makeFunctionRing",
    "ArithOp",
    "ringArith",
    "enumerateElements",
    "verifyRingAxioms",
    "RingHom",
    "TableHom",
    "ComponentProjection",
    "HomReport",
    "verifyHom",
    "makeHom",
    "identityHom",
    "scaleFirstHom",
    "crtHom",
    "loadHomTable",
    # Polynomials
    "FpPoly",
    "PolyOp",
    "polyArith",
    "polyGcd",
    "powMod",
    "dividesXpMinusX",
    "isSquarefree",
    "rootsWithMultiplicity",
    "simpleRoots",
    "Factorization",
    "factorIrreducible",
    "isIrreducible",
    # Constructions
    "QuotientRing",
    "makeQuotient",
    "evaluationHom",
    "PolyOverRing",
    "reduceModMaximal",
    "decomposeQuotient",
    "predictedQuotientOrder",
    "makeQuotientOverPRing",
    "eightNPlusOneExample",
    "ModuleDesc",
    "zeroModule",
    "freeModule",
    "cyclicModule",
    "loadActionTable",
    "TrivialExtensionRing",
    "makeTrivialExtension",
    "AmalgDesc",
    "AmalgamationRing",
    "makeAmalgamation",
    "makeDuplication",
    "makeScaledAmalgamationExample",
    # Decisions
    "IdealForm",
    "IdealDesc",
    "principalIdeal",
    "idealSum",
    "generatedIdeal",
    "zeroIdeal",
    "unitIdeal",
    "zmodIdeal",
    "quotientIdeal",
    "productIdeal",
    "enumerateIdealsOracle",
    "maximalIdeals",
    "Method",
    "DecisionReport",
    "isPRingOracle",
    "isVnrOracle",
    "isPIdeal",
    "isPRingViaPrincipalIdeals",
    "McCoyDecomposition",
    "mccoyDecompose",
    "productDecomposition",
    "CheckMode",
    "pIdealsOfZmod",
    "pIdealTableOfZmod",
    "quotientHasPIdeal",
    "pIdealsOfQuotient",
    "pRingVnrCertificate",
    "pringPolyQuotientIsPRing",
    "amalgamationIsPRing",
    "trivialExtCheck",
    "irreduciblePowerStatements",
    # Command line
    "formatRingExpr",
    "parseRingExpr",
    "evaluateRingExpr",
    "Command",
    "CommandResult",
    "runCommand",
    "__version__",
]
