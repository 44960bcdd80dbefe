#!/usr/bin/env python3
"""
Exhaustive sweeps over element indices, optionally split across worker threads.
"""

from concurrent.futures import ThreadPoolExecutor, as_completed
from typing import Callable, List, Optional

from pringkit.core.settings import getSettings


def firstFailure(start: int, stop: int, predicate: Callable[[int], bool]) -> Optional[int]:
    """Smallest index in [start, stop) where predicate is False, or None."""
    for index in range(start, stop):
        if not predicate(index):
            return index
    return None


def partition(count: int, parts: int) -> List[range]:
    """Split [0, count) into at most `parts` contiguous ranges."""
    parts = max(1, min(parts, count))
    size, extra = divmod(count, parts)
    ranges = []
    start = 0
    for k in range(parts):
        stop = start + size + (1 if k < extra else 0)
        ranges.append(range(start, stop))
        start = stop
    return ranges


def sweepForWitness(count: int, predicate: Callable[[int], bool], workers: Optional[int] = None) -> Optional[int]:
    """
    Run predicate over 0..count-1 and return the smallest failing index.

    With several workers every partition reports its own first failure and the
    global minimum is returned, so the witness does not depend on the split.

    Args:
        count: Number of indices
        predicate: Pure function of an index
        workers: Partitions to run in parallel (defaults to the active settings)

    Returns:
        The minimum index where predicate is False, or None if it holds everywhere
    """
    if workers is None:
        workers = getSettings().workers
    if workers <= 1 or count < 2:
        return firstFailure(0, count, predicate)

    failures = []
    with ThreadPoolExecutor(max_workers=workers) as executor:
        futures = {
            executor.submit(firstFailure, chunk.start, chunk.stop, predicate): chunk
            for chunk in partition(count, workers)
        }
        for future in as_completed(futures):
            result = future.result()
            if result is not None:
                failures.append(result)
    return min(failures) if failures else None


__all__ = [
    "firstFailure",
    "partition",
    "sweepForWitness",
]
