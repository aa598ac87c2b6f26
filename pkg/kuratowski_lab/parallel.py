"""
Worker fan-out for the searches.

Tasks are independent (one poset each); results come back in task order, so merging
them is a plain fold and the outcome never depends on the number of workers.
"""

import functools
import multiprocessing as mp
from typing import Any, Callable, Dict, Iterable, List, TypeVar

from .context import context_snapshot, log_context

T = TypeVar('T')
R = TypeVar('R')


def _run_in_context(func: Callable[[T], R], context: Dict[str, Any], task: T) -> R:
    with log_context(**context):
        return func(task)


def run_tasks(func: Callable[[T], R], tasks: Iterable[T], jobs: int = 1, chunksize: int = 4) -> List[R]:
    """
    Apply ``func`` to every task, in order.

    ``func`` must be a module-level function when ``jobs > 1`` so it can be pickled.
    Workers re-enter the caller's log context.
    """
    if jobs <= 1:
        return [func(task) for task in tasks]
    worker = functools.partial(_run_in_context, func, context_snapshot())
    with mp.Pool(jobs) as pool:
        return list(pool.imap(worker, tasks, chunksize=chunksize))

