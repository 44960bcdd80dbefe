#!/usr/bin/env python3
"""
JSON schemas for the settings file and the machine-readable report.
Uses composition to avoid redundancy.
"""

# ============================================================================
# Common Schema Fragments
# ============================================================================

positiveIntegerSchema = {
    "type": "integer",
    "minimum": 1,
}

witnessSchema = {
    "anyOf": [
        {"type": "null"},
        {"type": "integer"},
        {"type": "string"},
        {"type": "array", "items": {"type": ["integer", "string"]}},
    ],
}

# ============================================================================
# Settings
# ============================================================================

settingsSchema = {
    "type": "object",
    "properties": {
        "sizeGuard": positiveIntegerSchema,
        "oracleGuard": positiveIntegerSchema,
        "workers": positiveIntegerSchema,
        "randomSeed": {"type": "integer"},
    },
    "additionalProperties": False,
}

# ============================================================================
# Reports
# ============================================================================

decisionReportSchema = {
    "type": "object",
    "properties": {
        "name": {"type": "string"},
        "verdict": {"type": "boolean"},
        "method": {"enum": ["oracle", "theorem"]},
        "witness": witnessSchema,
        "elementsChecked": {"type": "integer", "minimum": 0},
        "elapsedSeconds": {"type": "number", "minimum": 0},
        "detail": {"type": "string"},
    },
    "required": ["name", "verdict", "method", "witness", "elementsChecked", "elapsedSeconds", "detail"],
    "additionalProperties": False,
}

reportSchema = {
    "type": "object",
    "properties": {
        "tool": {"const": "pringkit"},
        "version": {"type": "string"},
        "command": {"enum": ["check", "ideals", "decompose", "verify", "factor"]},
        "expression": {"type": "string"},
        "p": {"type": ["integer", "null"]},
        "exitCode": {"enum": [0, 1, 2, 3]},
        "reports": {"type": "array", "items": decisionReportSchema},
        "data": {"type": "object"},
    },
    "required": ["tool", "version", "command", "expression", "p", "exitCode", "reports", "data"],
    "additionalProperties": False,
}


__all__ = [
    "settingsSchema",
    "decisionReportSchema",
    "reportSchema",
]
