#!/usr/bin/env python3
"""
Decision reports: a verdict, how it was reached, and the evidence.
"""

from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Dict, Optional


class Method(Enum):
    """How a verdict was computed."""
    oracle = "oracle"
    theorem = "theorem"

    def __str__(self) -> str:
        return self.value


def encodeWitness(witness: Any) -> Any:
    """Witness in the JSON report form: null, an integer, a string, or a list of those."""
    if witness is None or isinstance(witness, (int, str)):
        return witness
    if isinstance(witness, (list, tuple)):
        return [w if isinstance(w, (int, str)) else str(w) for w in witness]
    return str(witness)


@dataclass
class DecisionReport:
    """Outcome of one decision procedure."""
    name: str
    verdict: bool
    method: Method
    witness: Any = None
    elementsChecked: int = 0
    elapsedSeconds: float = 0.0
    detail: str = ""
    data: Dict[str, Any] = field(default_factory=dict, repr=False)

    def toRecord(self) -> Dict[str, Any]:
        """Stable, JSON-ready record (key order fixed)."""
        return {
            "name": self.name,
            "verdict": self.verdict,
            "method": self.method.value,
            "witness": encodeWitness(self.witness),
            "elementsChecked": self.elementsChecked,
            "elapsedSeconds": round(self.elapsedSeconds, 6),
            "detail": self.detail,
        }

    def summary(self) -> str:
        verdict = "yes" if self.verdict else "no"
        text = f"{self.name}: {verdict} [{self.method.value}]"
        if self.witness is not None:
            text += f" witness {encodeWitness(self.witness)}"
        if self.detail:
            text += f" ({self.detail})"
        return text


def theoremReport(name: str, verdict: bool, detail: str = "", witness: Optional[Any] = None, elapsedSeconds: float = 0.0) -> DecisionReport:
    return DecisionReport(name, verdict, Method.theorem, witness, 0, elapsedSeconds, detail)


__all__ = [
    "Method",
    "encodeWitness",
    "DecisionReport",
    "theoremReport",
]
