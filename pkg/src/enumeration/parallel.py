"""Class-parallel map with an exact, order-independent reduction."""
from __future__ import annotations

from collections.abc import Callable, Sequence
from typing import TypeVar

from joblib import Parallel, delayed

from src.pipeline.config import EnumerationConfig, get_config

T = TypeVar("T")


def map_classes(
    func: Callable[[T], list[int]],
    items: Sequence[T],
    *,
    config: EnumerationConfig | None = None,
) -> list[list[int]]:
    """
    Apply func to every item, in parallel when configured and worth it.

    Results come back in input order whatever the schedule.
    """
    parallel = (config or get_config()).parallel
    if parallel.n_jobs == 1 or len(items) < parallel.min_classes:
        return [func(item) for item in items]
    return Parallel(n_jobs=parallel.n_jobs)(delayed(func)(item) for item in items)


def sum_vectors(vectors: Sequence[Sequence[int]], length: int) -> list[int]:
    """Coefficientwise integer sum, zero-padded to length."""
    acc = [0] * length
    for vec in vectors:
        for i, c in enumerate(vec):
            acc[i] += c
    return acc
