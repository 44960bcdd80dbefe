#!/usr/bin/env python3
"""
Argument parsing for ringtool.py.
"""

import argparse
from dataclasses import dataclass
from typing import Dict, List, Optional

from pringkit.cli.argcompleteSetup import enableArgcomplete, getCommandCompleter, getExpressionCompleter, getPrimeCompleter


@dataclass
class RingToolArgs:
    """ringtool.py arguments."""
    command: str
    expression: str
    p: Optional[int] = None

    # Output
    json: bool = False
    quiet: bool = False
    verbose: bool = False
    noConsoleTimestamps: bool = False

    # Settings overrides
    configDir: Optional[str] = None
    tableDir: Optional[str] = None
    sizeGuard: Optional[int] = None
    oracleGuard: Optional[int] = None
    workers: Optional[int] = None

    def settingsOverrides(self) -> Dict[str, Optional[int]]:
        return {"sizeGuard": self.sizeGuard, "oracleGuard": self.oracleGuard, "workers": self.workers}


def positiveInt(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be a positive integer, got {text}")
    return value


def buildParser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ringtool.py",
        description="Construct finite commutative rings and decide p-ring, p-ideal and regularity questions.",
        epilog=(
            "Examples:\n"
            "python3 ringtool.py check \"Z/60\" --p 3\n"
            "python3 ringtool.py ideals \"Z/60\"\n"
            "python3 ringtool.py verify \"GF(2)[x]/(x^2+1)\" --p 2\n"
            "python3 ringtool.py decompose \"GF(2)*GF(2)*GF(2)\" --p 2\n"
            "python3 ringtool.py factor \"GF(3)[x]/(x^3-x)\" --json\n\n"
            "Exit codes: 0 verdict computed, 1 disagreement, 2 usage or parse error, 3 size guard"
        ),
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    parser.add_argument(
        "command",
        choices=getCommandCompleter(),
        help="What to compute.",
    )
    parser.add_argument(
        "expression",
        help="Ring expression, e.g. \"Z/60\" or \"amalg(GF(2)*GF(2), Z/6, scale0:3, (3))\".",
    ).completer = getExpressionCompleter
    parser.add_argument(
        "--p",
        dest="p",
        type=int,
        help="Prime for p-ring and p-ideal questions.",
    ).completer = getPrimeCompleter
    parser.add_argument(
        "--json",
        dest="json",
        action="store_true",
        help="Write one machine-readable JSON record instead of text.",
    )
    parser.add_argument(
        "-q",
        "--quiet",
        dest="quiet",
        action="store_true",
        help="Only show results and errors.",
    )
    parser.add_argument(
        "--verbose",
        dest="verbose",
        action="store_true",
        help="Show sweep statistics and settings.",
    )
    parser.add_argument(
        "--noTimestamps",
        dest="noConsoleTimestamps",
        action="store_true",
        help="Do not prefix console lines with timestamps.",
    )
    parser.add_argument(
        "--configDir",
        dest="configDir",
        help="Directory holding settings.json (defaults to PRINGKIT_CONFIG_DIR, then configs/).",
    )
    parser.add_argument(
        "--tableDir",
        dest="tableDir",
        help="Directory that relative hom and action table paths are read from (defaults to the current directory).",
    )
    parser.add_argument(
        "--sizeGuard",
        dest="sizeGuard",
        type=positiveInt,
        help="Largest ring that may be built element by element.",
    )
    parser.add_argument(
        "--oracleGuard",
        dest="oracleGuard",
        type=positiveInt,
        help="Largest ring handed to the ideal-lattice, McCoy and regularity oracles.",
    )
    parser.add_argument(
        "--workers",
        dest="workers",
        type=positiveInt,
        help="Partitions for exhaustive sweeps.",
    )
    return parser


def parseRingToolArgs(args: Optional[List[str]] = None) -> RingToolArgs:
    """
    Parse ringtool.py arguments.

    Args:
        args: Command line arguments (defaults to sys.argv[1:])

    Raises:
        SystemExit: With code 2 on a usage error (argparse)
    """
    parser = buildParser()
    enableArgcomplete(parser)
    namespace = parser.parse_args(args)
    return RingToolArgs(**vars(namespace))


__all__ = [
    "RingToolArgs",
    "positiveInt",
    "buildParser",
    "parseRingToolArgs",
]
