"""
Sharded first-hit search across worker processes
"""

import logging
from multiprocessing import Pool
from typing import Callable, Optional, Sequence, Tuple, TypeVar


logger = logging.getLogger(__name__)

T = TypeVar("T")
R = TypeVar("R")


def first_hit(worker: Callable[[T], Optional[R]], tasks: Sequence[T], jobs: int = 1) -> Optional[Tuple[int, R]]:
    """Run worker over tasks and return (index, result) of the lowest-indexed non-None result.

    A hit in a later shard never preempts an earlier one, so the answer does not
    depend on jobs. worker and tasks must be picklable when jobs > 1.
    """
    if jobs <= 1 or len(tasks) <= 1:
        for idx, task in enumerate(tasks):
            result = worker(task)
            if result is not None:
                return idx, result
        return None

    logger.debug("sharding %d tasks over %d workers", len(tasks), jobs)
    # leaving the block terminates the workers, so shards still running stop at the first hit
    with Pool(processes=jobs) as pool:
        for idx, result in enumerate(pool.imap(worker, tasks, chunksize=1)):
            if result is not None:
                return idx, result
    return None
