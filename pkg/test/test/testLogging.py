#!/usr/bin/env python3
"""
Unit tests for console logging.
"""

import io
import re
import sys
import unittest
from contextlib import redirect_stdout
from pathlib import Path

# Add project root to path
scriptDir = Path(__file__).parent.absolute()
sys.path.insert(0, str(scriptDir.parent.parent))

from pringkit.core.logging import (
    Verbosity,
    getShowConsoleTimestamps,
    getVerbosity,
    printError,
    printInfo,
    printVerbose,
    printWarning,
    safePrint,
    setShowConsoleTimestamps,
    setVerbosity,
    setVerbosityFromArgs,
)


def capture(function, *args) -> str:
    output = io.StringIO()
    with redirect_stdout(output):
        function(*args)
    return output.getvalue()


class TestVerbosity(unittest.TestCase):
    """Tests for verbosity levels."""

    def setUp(self):
        setVerbosity(Verbosity.normal)
        setShowConsoleTimestamps(False)

    def tearDown(self):
        setVerbosity(Verbosity.normal)
        setShowConsoleTimestamps(True)

    def testFromArgs(self):
        """Test --quiet takes precedence over --verbose."""
        setVerbosityFromArgs(quiet=True, verbose=True)
        self.assertEqual(getVerbosity(), Verbosity.quiet)
        setVerbosityFromArgs(verbose=True)
        self.assertEqual(getVerbosity(), Verbosity.verbose)
        setVerbosityFromArgs()
        self.assertEqual(getVerbosity(), Verbosity.normal)

    def testQuietKeepsErrors(self):
        """Test quiet mode drops info and warnings but not errors."""
        setVerbosity(Verbosity.quiet)
        self.assertEqual(capture(printInfo, "sweeping"), "")
        self.assertEqual(capture(printWarning, "skipped"), "")
        self.assertIn("size guard", capture(printError, "size guard"))

    def testVerboseOnly(self):
        """Test sweep statistics appear only at verbose level."""
        self.assertEqual(capture(printVerbose, "64 element checks"), "")
        setVerbosity(Verbosity.verbose)
        self.assertIn("[VERBOSE] 64 element checks", capture(printVerbose, "64 element checks"))


class TestTimestamps(unittest.TestCase):
    """Tests for console timestamps."""

    def tearDown(self):
        setShowConsoleTimestamps(True)

    def testEveryLinePrefixed(self):
        """Test each line of a multi-line message gets a timestamp."""
        setShowConsoleTimestamps(True)
        self.assertTrue(getShowConsoleTimestamps())
        lines = capture(safePrint, "n = 3\nelements: 8").splitlines()
        self.assertEqual(len(lines), 2)
        for line in lines:
            self.assertRegex(line, r"^\[\d{4}-\d{2}-\d{2}T\d{2}:\d{2}:\d{2}\] ")

    def testDisabled(self):
        """Test disabled timestamps leave the text untouched."""
        setShowConsoleTimestamps(False)
        self.assertEqual(capture(safePrint, '{"tool": "pringkit"}'), '{"tool": "pringkit"}\n')
        self.assertIsNone(re.match(r"^\[", capture(safePrint, "plain")))


if __name__ == "__main__":
    unittest.main()
