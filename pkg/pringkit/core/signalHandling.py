#!/usr/bin/env python3
"""
Signal handling utilities for graceful shutdown.
Handles CTRL+C during long oracle sweeps.
"""

import signal
import sys


def setupSignalHandlers() -> None:
    """Set up signal handlers for graceful shutdown on CTRL+C and SIGTERM."""
    def signalHandler(signum, frame):
        """Handle CTRL+C and other signals gracefully."""
        from pringkit.core.logging import printWarning, safePrint

        safePrint()
        printWarning("Interrupted by user (CTRL+C); no verdict was computed")
        sys.exit(130)  # Standard exit code for SIGINT

    signal.signal(signal.SIGINT, signalHandler)
    if hasattr(signal, 'SIGTERM'):
        signal.signal(signal.SIGTERM, signalHandler)


__all__ = [
    "setupSignalHandlers",
]
