import logging
import os
from concurrent.futures import ThreadPoolExecutor
from typing import Callable, Iterable, List, Optional, TypeVar

from app.application.settings import settings

logger = logging.getLogger("Worker Pool")

T = TypeVar("T")
R = TypeVar("R")


def worker_count(threads: Optional[int] = None) -> int:
    configured = threads if threads is not None else settings.THREADS
    return max(1, configured or os.cpu_count() or 1)


def ordered_map(function: Callable[[T], R], items: Iterable[T],
                threads: Optional[int] = None) -> List[R]:
    """Map over items on a thread pool; results come back in input order."""
    items = list(items)
    workers = min(worker_count(threads), max(1, len(items)))
    if workers == 1:
        return [function(item) for item in items]
    logger.debug(f"Mapping {len(items)} items on {workers} threads")
    with ThreadPoolExecutor(max_workers=workers) as executor:
        return list(executor.map(function, items))
