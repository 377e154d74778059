"""Deterministic work distribution for sweeps.

Every sweep in the package is a pure map over sample points, so results are
assembled in input order no matter how many workers run; output bytes are
identical for any thread count. The worker count comes from the
``TEAMGAMES_THREADS`` environment variable (default 1).
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor

THREADS_ENV = "TEAMGAMES_THREADS"


def thread_count() -> int:
    raw = os.environ.get(THREADS_ENV, "")
    try:
        count = int(raw)
    except ValueError:
        return 1
    return max(count, 1)


def ordered_map(fn, items, workers: int | None = None) -> list:
    """Map ``fn`` over ``items``, preserving order; threads only when asked."""
    items = list(items)
    if workers is None:
        workers = thread_count()
    if workers <= 1 or len(items) <= 1:
        return [fn(item) for item in items]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, items))
