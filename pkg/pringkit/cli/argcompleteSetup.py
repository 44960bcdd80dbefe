#!/usr/bin/env python3
"""
Argcomplete setup for Python-based tab completion.
Provides completers for ringtool.py arguments.
"""

try:
    import argcomplete
    argcompleteAvailable = True
except ImportError:
    argcompleteAvailable = False


def getCommandCompleter():
    """Get completer for ringtool commands."""
    return ['check', 'ideals', 'decompose', 'verify', 'factor']


def getPrimeCompleter(**kwargs):
    """Get completer for --p: the small primes the desk-scale rings use."""
    return ['2', '3', '5', '7', '11', '13', '17']


def getExpressionCompleter(prefix: str = "", **kwargs):
    """Get completer for ring expressions: the constructor heads."""
    heads = ['Z/', 'GF(', 'triv(', 'amalg(', 'dup(', 'fun(']
    return [head for head in heads if head.startswith(prefix)]


def enableArgcomplete(parser) -> bool:
    """
    Enable argcomplete if available.
    Call this after building the parser and before parsing.

    Returns:
        True if argcomplete is available and enabled, False otherwise
    """
    if not argcompleteAvailable:
        return False

    try:
        argcomplete.autocomplete(parser)
        return True
    except Exception:
        return False


__all__ = [
    'argcompleteAvailable',
    'getCommandCompleter',
    'getPrimeCompleter',
    'getExpressionCompleter',
    'enableArgcomplete',
]
