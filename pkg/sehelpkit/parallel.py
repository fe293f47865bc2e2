import logging
import os
from concurrent.futures import ProcessPoolExecutor
from typing import *

from tqdm import tqdm

__all__ = ["resolve_workers", "chunked", "ordered_map"]

logger = logging.getLogger(__name__)

T = TypeVar("T")
R = TypeVar("R")


def resolve_workers(workers: Optional[int]) -> int:
    """0 or None means one worker per CPU."""
    if not workers:
        return os.cpu_count() or 1
    if workers < 0:
        raise ValueError(f"worker count must be >= 0, got {workers}")
    return workers


def chunked(items: Sequence[T], chunks: int) -> List[Tuple[T, ...]]:
    """Split `items` into at most `chunks` contiguous, nearly equal slices."""
    chunks = max(1, min(chunks, len(items)))
    size, extra = divmod(len(items), chunks)
    out = []
    start = 0
    for i in range(chunks):
        stop = start + size + (1 if i < extra else 0)
        out.append(tuple(items[start:stop]))
        start = stop
    return out


def ordered_map(
    fn: Callable[[T], R],
    items: Sequence[T],
    workers: Optional[int] = 1,
    progress: bool = False,
    desc: Optional[str] = None,
    unit: str = "it",
) -> List[R]:
    """`[fn(x) for x in items]`, optionally spread over worker processes.

    Results always come back in input order, so callers that fold them get the
    same answer whatever the worker count. `fn` must be picklable when more than
    one worker is used.
    """
    workers = resolve_workers(workers)
    if workers == 1 or len(items) <= 1:
        return list(tqdm(map(fn, items), total=len(items), disable=not progress, desc=desc, unit=unit))

    logger.debug("dispatching %d jobs to %d worker processes", len(items), workers)
    chunksize = max(1, len(items) // (workers * 4))
    with ProcessPoolExecutor(max_workers=workers) as ex:
        return list(
            tqdm(
                ex.map(fn, items, chunksize=chunksize),
                total=len(items),
                disable=not progress,
                desc=desc,
                unit=unit,
            )
        )
