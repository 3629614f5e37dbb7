"""Deterministic parallel map.

Results come back in input order regardless of scheduling, so callers that
merge commutatively or serialize in order get identical output for any
worker count.  Worker functions must be module-level (picklable).
"""

from __future__ import annotations

import multiprocessing
import os
from typing import Callable, Iterable, Sequence, TypeVar

T = TypeVar("T")
R = TypeVar("R")


def default_workers() -> int:
    env = os.environ.get("EDGEREG_WORKERS")
    if env:
        try:
            return max(1, int(env))
        except ValueError:
            pass
    return max(1, min(4, os.cpu_count() or 1))


def pmap(fn: Callable[[T], R], items: Iterable[T], workers: int | None = None) -> list[R]:
    data: Sequence[T] = list(items)
    if workers is None:
        workers = default_workers()
    if workers <= 1 or len(data) <= 1:
        return [fn(x) for x in data]
    chunk = max(1, len(data) // (workers * 8))
    try:
        with multiprocessing.Pool(processes=workers) as pool:
            return pool.map(fn, data, chunksize=chunk)
    except (OSError, PermissionError):
        return [fn(x) for x in data]
