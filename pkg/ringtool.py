#!/usr/bin/env python3
# PYTHON_ARGCOMPLETE_OK
"""
pringkit command line: construct finite rings and decide p-ring questions.

Usage:
    python3 ringtool.py check "Z/60" --p 3
    python3 ringtool.py verify "GF(2)[x]/(x^2+1)" --p 2 --json
"""

import sys
from pathlib import Path

# Add project root to path so that pringkit is importable from a checkout
projectRoot = Path(__file__).parent.resolve()
sys.path.insert(0, str(projectRoot))

from pringkit.cli.main import main  # noqa: E402


if __name__ == "__main__":
    sys.exit(main())
