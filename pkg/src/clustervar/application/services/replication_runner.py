"""Order-preserving execution of independent replications."""

from collections.abc import Callable
from concurrent.futures import ThreadPoolExecutor
from typing import TypeVar

T = TypeVar("T")


def run_replications(task: Callable[[int], T], count: int, workers: int = 1) -> list[T]:
    """Run ``task(index)`` for index in range(count).

    Results come back in index order for any worker count, so callers that
    derive seeds from the index get identical output regardless of
    parallelism.
    """
    if workers <= 1:
        return [task(index) for index in range(count)]
    with ThreadPoolExecutor(max_workers=workers) as executor:
        return list(executor.map(task, range(count)))
