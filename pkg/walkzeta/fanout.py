"""Chunked grid evaluation, serial or fanned out to worker threads.

LAPACK calls release the GIL, so batched determinant/eigenvalue work on
separate grid chunks overlaps well in threads. Results always come back in
chunk order, so any reduction done afterwards sees the same sequence.
"""

import asyncio
import logging
import os
from collections.abc import Callable, Sequence
from typing import List, Optional, TypeVar

import numpy as np
from numpy.typing import NDArray

logger = logging.getLogger(__name__)

T = TypeVar("T")

# Below this many grid points threading costs more than it saves.
MIN_PARALLEL_ITEMS = 4096


def split(items: NDArray, n_chunks: int) -> List[NDArray]:
    n_chunks = max(1, min(n_chunks, len(items)))
    return [c for c in np.array_split(items, n_chunks) if len(c)]


async def amap_chunks(fn: Callable[[NDArray], T], chunks: Sequence[NDArray]) -> List[T]:
    """Run ``fn`` on every chunk in the default thread pool, keeping order."""
    return list(await asyncio.gather(*(asyncio.to_thread(fn, c) for c in chunks)))


def map_chunks(
    fn: Callable[[NDArray], T],
    items: NDArray,
    serial: bool = True,
    n_chunks: Optional[int] = None,
) -> List[T]:
    """Apply ``fn`` to consecutive chunks of ``items``.

    Args:
        fn: Function of one chunk (a leading-axis slice of ``items``).
        items: Array whose first axis enumerates grid points.
        serial: Evaluate chunks one after another in the calling thread.
        n_chunks: Number of chunks; defaults to the CPU count.

    Returns:
        ``fn`` results in chunk order.
    """
    if serial or len(items) < MIN_PARALLEL_ITEMS:
        return [fn(items)]
    chunks = split(items, n_chunks or os.cpu_count() or 1)
    try:
        asyncio.get_running_loop()
    except RuntimeError:
        logger.debug("fanning %d points over %d chunks", len(items), len(chunks))
        return asyncio.run(amap_chunks(fn, chunks))
    logger.debug("event loop already running, evaluating %d chunks serially", len(chunks))
    return [fn(c) for c in chunks]
