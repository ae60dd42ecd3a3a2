"""Fixed-size work units and their deterministic reduction.

Trials are cut into chunks whose sizes depend only on the trial count, and
each chunk draws from its own sub-stream. Chunks may run in any order on
any number of processes; results come back in chunk order.
"""

import multiprocessing

from ..Logging import getLogger

log = getLogger("experiments.scheduler")

CHUNK_TRIALS = 1024


def chunkSizes(total, chunk=CHUNK_TRIALS):
    """C{[chunk, chunk, ..., rest]} summing to C{total}."""
    total = int(total)
    sizes = [chunk] * (total // chunk)
    if total % chunk:
        sizes.append(total % chunk)
    return sizes


def runChunks(fn, tasks, workers=1):
    """Apply a picklable top-level function to every task, preserving order.

    @param fn       : Function of one task tuple
    @param tasks    : List of task tuples
    @param workers  : Process count; 1 runs inline
    """
    tasks = list(tasks)
    workers = max(1, int(workers or 1))
    if workers == 1 or len(tasks) < 2:
        return [fn(task) for task in tasks]
    workers = min(workers, len(tasks))
    log.debug("running %d chunks on %d workers", len(tasks), workers)
    with multiprocessing.Pool(workers) as pool:
        return pool.map(fn, tasks, chunksize=1)
