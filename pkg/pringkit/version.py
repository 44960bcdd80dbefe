#!/usr/bin/env python3
"""
Version information for pringkit.
"""

__version__ = "1.0.0"
