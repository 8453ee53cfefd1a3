"""Ordered thread-pool mapping capped by WIGGLY_THREADS."""

import logging
import os
from collections.abc import Callable, Iterable
from concurrent.futures import ThreadPoolExecutor
from typing import TypeVar

from .env import env_int

logger = logging.getLogger("wiggly-continua")

T = TypeVar("T")
R = TypeVar("R")


def thread_count() -> int:
    """Number of worker threads allowed by ``WIGGLY_THREADS``.

    Returns:
        The configured cap, or the CPU count when unset; always at least 1

    Raises:
        ValueError: If WIGGLY_THREADS is not an integer
    """
    count = env_int("WIGGLY_THREADS", os.cpu_count() or 1)
    return max(1, count)


def parallel_map(fn: Callable[[T], R], items: Iterable[T]) -> list[R]:
    """Apply ``fn`` to every item, returning results in input order.

    Work runs inline when only one thread is allowed or there is a single
    item, so results never depend on scheduling.

    Args:
        fn: Pure function to apply
        items: Inputs

    Returns:
        List of results aligned with ``items``
    """
    work = list(items)
    workers = min(thread_count(), len(work))
    if workers <= 1:
        return [fn(item) for item in work]
    logger.debug(f"Mapping {len(work)} items over {workers} threads")
    with ThreadPoolExecutor(max_workers=workers) as executor:
        return list(executor.map(fn, work))
