#!/usr/bin/env python3
"""
ringtool entry point: parse arguments, resolve settings, run one command.

Usage:
    python3 ringtool.py <command> <expression> [--p P] [--json] [options]
    python3 -m pringkit.cli.main <command> <expression> [--p P] [--json] [options]
"""

import sys
from typing import List, Optional

from pringkit.core.errors import RingKitError
from pringkit.core.logging import printError, printVerbose, safePrint, setShowConsoleTimestamps, setVerbosity, setVerbosityFromArgs, Verbosity
from pringkit.core.settings import loadSettings, setSettings
from pringkit.core.signalHandling import setupSignalHandlers
from pringkit.cli.cliArgs import parseRingToolArgs
from pringkit.cli.commands import renderResult, runCommand


def main(argv: Optional[List[str]] = None) -> int:
    """Main entry point for ringtool."""
    if argv is None:
        argv = sys.argv[1:]

    # Register signal handlers for graceful shutdown
    setupSignalHandlers()

    # Check for --version flag (before argument parsing)
    if "--version" in argv:
        from pringkit.version import __version__
        safePrint(f"pringkit version {__version__}")
        return 0

    args = parseRingToolArgs(argv)

    # JSON mode keeps stdout to the single record
    if args.json:
        setVerbosity(Verbosity.quiet)
        setShowConsoleTimestamps(False)
    else:
        setVerbosityFromArgs(quiet=args.quiet, verbose=args.verbose)
        setShowConsoleTimestamps(not args.noConsoleTimestamps)

    try:
        settings = loadSettings(args.configDir, args.settingsOverrides())
    except RingKitError as e:
        printError(str(e))
        return e.exitCode
    setSettings(settings)

    result = runCommand(args.command, args.expression, args.p, args.tableDir)
    printVerbose(f"{args.command} finished with exit code {result.exitCode}")
    renderResult(result, asJson=args.json)
    return result.exitCode


if __name__ == "__main__":
    sys.exit(main())
