#!/usr/bin/env python3
"""
The check, ideals, decompose, verify and factor commands.

runCommand prints nothing but warnings; it returns a CommandResult carrying the reports,
the command-specific data, text lines and the exit code. renderResult
writes either the human-readable form or one JSON record.

Exit codes: 0 a verdict was computed (whatever it is), 1 theorem and
oracle disagree or a verification failed, 2 usage or parse error, 3 size
guard.
"""

import json
from dataclasses import dataclass, field
from enum import Enum
from pathlib import Path
from typing import Any, Dict, List, Optional, Union

from jsonschema import validate as jsonValidate

from pringkit.core.errors import InternalInconsistencyError, InvalidParameterError, RingExprSyntaxError, RingKitError, SizeGuardError
from pringkit.core.logging import printError, printH2, printInfo, printVerbose, printWarning, safePrint
from pringkit.core.numberTheory import requirePrime
from pringkit.core.schemas import reportSchema
from pringkit.core.settings import getSettings
from pringkit.cli.dispatch import Property, PropertyDispatcher
from pringkit.cli.evaluator import QuotientPlan, RingEvaluator
from pringkit.cli.parser import parseRingExpr
from pringkit.cli.ringExpr import GFNode, QuotientNode, RingExpr, ZmodNode
from pringkit.decision.fastPaths import pIdealTableOfZmod, pIdealsOfQuotient, pIdealsOfZmod
from pringkit.decision.ideals import IdealDesc, enumerateIdealsOracle
from pringkit.decision.mccoy import isPrimeFieldPowerOf, mccoyDecompose, productDecomposition
from pringkit.decision.oracles import pIdealsOracle
from pringkit.decision.report import DecisionReport, Method, theoremReport
from pringkit.poly.algorithms import dividesXpMinusX, factorIrreducible, requireNonConstant, rootsWithMultiplicity
from pringkit.poly.fpPoly import FpPoly
from pringkit.version import __version__

toolName = "pringkit"


class Command(Enum):
    """Commands of ringtool."""
    check = "check"
    ideals = "ideals"
    decompose = "decompose"
    verify = "verify"
    factor = "factor"


@dataclass
class CommandResult:
    """Everything one invocation produced."""
    command: Command
    expression: str
    p: Optional[int]
    exitCode: int = 0
    reports: List[DecisionReport] = field(default_factory=list)
    data: Dict[str, Any] = field(default_factory=dict)
    lines: List[str] = field(default_factory=list)
    error: Optional[str] = None
    caret: str = ""

    def toRecord(self) -> Dict[str, Any]:
        """
        The machine-readable report, validated against reportSchema.

        Raises:
            jsonschema.ValidationError: If the record does not match the schema
        """
        record = {
            "tool": toolName,
            "version": __version__,
            "command": self.command.value,
            "expression": self.expression,
            "p": self.p,
            "exitCode": self.exitCode,
            "reports": [report.toRecord() for report in self.reports],
            "data": self.data,
        }
        jsonValidate(instance=record, schema=reportSchema)
        return record


def _properties(p: Optional[int]) -> List[Property]:
    if p is None:
        return [Property.vnr]
    return [Property.pRing, Property.nonzeroPIdeal, Property.vnr]


def _requireP(p: Optional[int], command: Command) -> int:
    if p is None:
        raise InvalidParameterError(f"'{command.value}' needs --p <prime>")
    return p


# ============================================================================
# check
# ============================================================================

def runCheck(node: RingExpr, dispatcher: PropertyDispatcher, result: CommandResult) -> None:
    """Each property by theorem when one applies, else by oracle; oracles above the guard are skipped."""
    skipped: List[SizeGuardError] = []
    for prop in _properties(result.p):
        try:
            report = dispatcher.decide(node, prop)
        except SizeGuardError as e:
            printWarning(f"{prop.reportName(result.p)}: skipped, {e}")
            skipped.append(e)
            continue
        result.reports.append(report)
        result.lines.append(report.summary())
    if not result.reports and skipped:
        raise skipped[0]
    result.data = {
        "verdicts": {report.name: report.verdict for report in result.reports},
        "skipped": [str(e) for e in skipped],
    }


# ============================================================================
# ideals
# ============================================================================

def _residueModulus(node: RingExpr, evaluator: RingEvaluator) -> Optional[int]:
    if isinstance(node, (ZmodNode, GFNode)):
        return evaluator.ring(node).modulus
    return None


def _idealLines(ideals: List[IdealDesc]) -> List[str]:
    return [f"  {ideal.describe()}" for ideal in ideals]


def runIdeals(node: RingExpr, evaluator: RingEvaluator, result: CommandResult) -> None:
    """
    p-ideals in structural form when available.

    Residue rings without --p list the p-ideals for every prime divisor;
    other rings without --p list their whole ideal lattice.
    """
    p = result.p
    n = _residueModulus(node, evaluator)

    if n is not None and p is None:
        table = pIdealTableOfZmod(n)
        result.data = {"table": {str(q): [ideal.describe() for ideal in ideals] for q, ideals in table.items()}}
        for q, ideals in table.items():
            result.lines.append(f"{q}-ideals:")
            result.lines.extend(_idealLines(ideals))
        result.reports.append(theoremReport("p-ideals of every prime", True, f"primes dividing {n}: {sorted(table)}"))
        return

    if p is None:
        ideals = enumerateIdealsOracle(evaluator.ring(node))
        result.reports.append(DecisionReport("ideals", True, Method.oracle, None, evaluator.ring(node).order, 0.0, f"{len(ideals)} ideal(s)"))
        result.data = {"ideals": [ideal.describe() for ideal in ideals]}
        result.lines.extend(_idealLines(ideals))
        return

    method = Method.theorem
    plan = evaluator.quotientPlan(node) if isinstance(node, QuotientNode) else None
    if n is not None:
        ideals = pIdealsOfZmod(n, p)
    elif plan is not None and plan.overPrimeField and plan.p == p:
        ideals = pIdealsOfQuotient(p, plan.modulus)
    else:
        method = Method.oracle
        ideals = pIdealsOracle(evaluator.ring(node), p)

    detail = f"{len(ideals)} {p}-ideal(s)"
    result.reports.append(DecisionReport(f"nonzero {p}-ideal", len(ideals) > 1, method, None, 0, 0.0, detail))
    result.data = {"ideals": [ideal.describe() for ideal in ideals], "method": method.value}
    result.lines.append(f"{p}-ideals:")
    result.lines.extend(_idealLines(ideals))


# ============================================================================
# decompose
# ============================================================================

def _decomposeQuotientPlan(plan: QuotientPlan, p: int, result: CommandResult) -> bool:
    """Read F_p^n off a quotient whose moduli split with distinct roots; False if they do not."""
    if plan.p != p:
        return False
    moduli = [(0, plan.modulus)] if plan.overPrimeField else plan.decomposition.nontrivial
    if not moduli or not all(dividesXpMinusX(f) for _, f in moduli):
        return False
    labelled = not plan.overPrimeField and len(plan.decomposition.reduced) > 1
    projections = [
        f"component {j}: x -> {a}" if labelled else f"x -> {a}"
        for j, f in moduli
        for a, _ in rootsWithMultiplicity(f)
    ]
    n = len(projections)
    result.data = {
        "n": n,
        "order": plan.predictedOrder,
        "orderIsPPowerN": plan.predictedOrder == p ** n,
        "idealCount": 2 ** n,
        "method": Method.theorem.value,
        "maximalIdeals": [],
        "projections": projections,
    }
    detail = f"order {plan.predictedOrder} = {p}^{n}, {2 ** n} ideals, evaluation at the roots of the moduli"
    result.reports.append(theoremReport(f"GF({p})^n decomposition", True, detail))
    return True


def runDecompose(node: RingExpr, evaluator: RingEvaluator, result: CommandResult) -> None:
    """R ≅ F_p^n with projections, element and ideal counts."""
    p = _requireP(result.p, Command.decompose)
    if isinstance(node, QuotientNode) and _decomposeQuotientPlan(evaluator.quotientPlan(node), p, result):
        if result.data["order"] <= getSettings().oracleGuard:
            counted = len(enumerateIdealsOracle(evaluator.ring(node)))
            if counted != result.data["idealCount"]:
                raise InternalInconsistencyError(f"{counted} ideals, expected {result.data['idealCount']}")
    else:
        ring = evaluator.ring(node)
        if isPrimeFieldPowerOf(ring, p):
            decomposition = productDecomposition(ring, p, countIdeals=True)
        else:
            decomposition = mccoyDecompose(ring, p)
        result.data = decomposition.toData()
        detail = f"order {ring.order} = {p}^{decomposition.n}, {decomposition.idealCount} ideals"
        result.reports.append(DecisionReport(
            f"GF({p})^n decomposition", True, decomposition.method, None,
            ring.order if decomposition.method is Method.oracle else 0, decomposition.elapsedSeconds, detail,
        ))

    data = result.data
    result.lines.append(f"n = {data['n']}")
    result.lines.append(f"elements: {data['order']}")
    result.lines.append(f"ideals: {data['idealCount']}")
    result.lines.append(f"method: {data['method']}")
    result.lines.extend(f"  projection {projection}" for projection in data["projections"])


# ============================================================================
# verify
# ============================================================================

def runVerify(node: RingExpr, dispatcher: PropertyDispatcher, result: CommandResult) -> None:
    """
    Decide every property both ways and compare.

    Theorem verdicts are recorded before any oracle runs, so they survive a
    size guard failure on the oracle side.
    """
    pairs = []
    for prop in _properties(result.p):
        theorem = dispatcher.theorem(node, prop)
        if theorem is None:
            printVerbose(f"{prop.reportName(result.p)}: no structural criterion, not compared")
            continue
        result.reports.append(theorem)
        result.lines.append(theorem.summary())
        pairs.append((prop, theorem))
    result.data = {"comparisons": []}
    if not pairs:
        printWarning("No structural criterion applies to this expression; nothing to compare")
        return

    disagreements = []
    for prop, theorem in pairs:
        oracle = dispatcher.oracle(node, prop)
        result.reports.append(oracle)
        result.lines.append(oracle.summary())
        agree = oracle.verdict == theorem.verdict
        result.data["comparisons"].append({
            "property": theorem.name,
            "theorem": theorem.verdict,
            "oracle": oracle.verdict,
            "agree": agree,
        })
        if not agree:
            disagreements.append(theorem.name)
    if disagreements:
        raise InternalInconsistencyError(f"theorem and oracle disagree on: {', '.join(disagreements)}")
    result.lines.append(f"theorem and oracle agree on {len(pairs)} propert{'y' if len(pairs) == 1 else 'ies'}")


# ============================================================================
# factor
# ============================================================================

def _factorData(component: int, f: FpPoly) -> Dict[str, Any]:
    if f.isConstant():
        # unit modulus: the component is the zero ring
        return {
            "component": component,
            "poly": str(f),
            "leadingCoefficient": f.leadingCoefficient,
            "factors": [],
            "roots": [],
            "splitsWithDistinctRoots": True,
        }
    factorization = factorIrreducible(f)
    return {
        "component": component,
        "poly": str(f),
        "leadingCoefficient": factorization.leadingCoefficient,
        "factors": [{"factor": str(g), "multiplicity": m} for g, m in factorization],
        "roots": [{"root": a, "multiplicity": m} for a, m in rootsWithMultiplicity(f)],
        "splitsWithDistinctRoots": dividesXpMinusX(f),
    }


def _factorLines(entry: Dict[str, Any], p: int) -> List[str]:
    if not entry["factors"]:
        return [f"{entry['poly']} is a unit over GF({p}); the component is the zero ring"]
    factors = " · ".join(
        f"({item['factor']})" + (f"^{item['multiplicity']}" if item["multiplicity"] > 1 else "")
        for item in entry["factors"]
    )
    lead = entry["leadingCoefficient"]
    lines = [f"{entry['poly']} = {'' if lead == 1 else f'{lead} · '}{factors}  over GF({p})"]
    if entry["roots"]:
        lines.append("  root  multiplicity")
        lines.extend(f"  {item['root']:>4}  {item['multiplicity']:>12}" for item in entry["roots"])
    else:
        lines.append(f"  no roots in GF({p})")
    return lines


def runFactor(node: RingExpr, evaluator: RingEvaluator, result: CommandResult) -> None:
    """Irreducible factorization and roots table of the quotient modulus, per component."""
    if not isinstance(node, QuotientNode):
        raise InvalidParameterError("'factor' needs a quotient expression such as GF(3)[x]/(x^3-x)")
    plan = evaluator.quotientPlan(node)
    if result.p is not None and result.p != plan.p:
        raise InvalidParameterError(f"--p {result.p} does not match the coefficient field GF({plan.p})")
    if plan.overPrimeField:
        moduli = [requireNonConstant(plan.modulus, "quotient modulus")]
    else:
        moduli = list(plan.decomposition.reduced)
    entries = [_factorData(j, f) for j, f in enumerate(moduli)]
    result.data = {"components": entries}
    for entry in entries:
        if len(entries) > 1:
            result.lines.append(f"component {entry['component']}:")
        result.lines.extend(_factorLines(entry, plan.p))
    splits = all(entry["splitsWithDistinctRoots"] for entry in entries)
    rootCount = sum(len(entry["roots"]) for entry in entries)
    result.reports.append(theoremReport("splits with distinct roots", splits, f"{rootCount} root(s) over {len(entries)} component(s)"))


# ============================================================================
# Dispatch
# ============================================================================

def runCommand(
    command: Union[Command, str],
    expression: str,
    p: Optional[int] = None,
    tableDir: Optional[Union[str, Path]] = None,
) -> CommandResult:
    """
    Parse, evaluate and run one command.

    Errors are not raised: they set exitCode and error on the result, and
    the reports computed before the failure are kept.

    Args:
        command: One of check, ideals, decompose, verify, factor
        expression: Ring expression text
        p: Prime for p-dependent questions
        tableDir: Directory for relative hom and action table paths
    """
    command = Command(command)
    result = CommandResult(command, expression, p)
    try:
        if p is not None:
            requirePrime(p)
        node = parseRingExpr(expression)
        evaluator = RingEvaluator(expression, tableDir)
        if command is Command.check:
            runCheck(node, PropertyDispatcher(evaluator, p), result)
        elif command is Command.ideals:
            runIdeals(node, evaluator, result)
        elif command is Command.decompose:
            runDecompose(node, evaluator, result)
        elif command is Command.verify:
            runVerify(node, PropertyDispatcher(evaluator, p), result)
        else:
            runFactor(node, evaluator, result)
    except RingKitError as e:
        result.exitCode = e.exitCode
        result.error = str(e)
        if isinstance(e, RingExprSyntaxError):
            result.caret = e.caretLine()
            result.data["error"] = {"message": e.message, "offset": e.offset, "expected": e.expected}
        else:
            result.data["error"] = {"message": str(e), "type": type(e).__name__}
    return result


def renderResult(result: CommandResult, asJson: bool = False) -> None:
    """Write the result as text, or as exactly one JSON line on stdout."""
    if asJson:
        safePrint(json.dumps(result.toRecord(), ensure_ascii=False))
        return
    printH2(f"{result.command.value} {result.expression}" + (f" (p = {result.p})" if result.p is not None else ""))
    for line in result.lines:
        safePrint(line)
    if result.error:
        printError(result.error)
        if result.caret:
            safePrint(result.caret)
    elif result.exitCode == 0:
        printInfo(f"Done ({len(result.reports)} report(s))")


__all__ = [
    "Command",
    "CommandResult",
    "runCheck",
    "runIdeals",
    "runDecompose",
    "runVerify",
    "runFactor",
    "runCommand",
    "renderResult",
]
