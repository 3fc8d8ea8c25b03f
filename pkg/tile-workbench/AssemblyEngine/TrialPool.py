import sys
import traceback
from multiprocessing import Pool
from typing import Callable, Iterable, Iterator, Optional, Sequence, Tuple

import psutil

from ConfigValidator.Config.WorkbenchConfig import WorkbenchConfig


class WorkerFailure(RuntimeError):
    pass


def resolve_workers(requested: Optional[int] = None) -> int:
    """0 means one worker per physical core."""
    requested = WorkbenchConfig.worker_count if requested is None else requested
    if requested == 0:
        return psutil.cpu_count(logical=False) or 1
    return max(1, requested)


def _guarded(job: Tuple[Callable, Sequence]):
    func, args = job
    try:
        return func(*args), None
    except Exception:
        ex_type, ex_value, tb = sys.exc_info()
        return None, (ex_type.__name__, str(ex_value), ''.join(traceback.format_tb(tb)))


def map_in_order(func: Callable, jobs: Iterable[Sequence], workers: int = 1, chunksize: int = 16) -> Iterator:
    """func(*job) for every job, results in job order.

    With more than one worker the jobs run in a process pool, so `func` and its arguments must be
    picklable. A failure inside a worker is raised here as WorkerFailure carrying the remote traceback.
    """
    if workers <= 1:
        for args in jobs:
            yield func(*args)
        return
    with Pool(workers) as pool:
        for result, error in pool.imap(_guarded, ((func, args) for args in jobs), chunksize=chunksize):
            if error is not None:
                name, message, tb = error
                raise WorkerFailure(f"{name}: {message} (in subprocess)\n{tb}")
            yield result
