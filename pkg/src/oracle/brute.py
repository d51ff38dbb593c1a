"""
Brute-force ground truth for the enumeration pipelines.

Every orbit is found by exhaustive canonicalization over the pair group; nothing here
uses cycle-index or class-summation shortcuts except the Burnside self-checks, which
iterate all n! elements one by one.
"""
from __future__ import annotations

import itertools
import logging
import math
from collections.abc import Iterator

import numpy as np

from src.enumeration.genfunc import (
    GraphCountVector,
    MultigraphSeriesVector,
    fixed_subset_count,
)
from src.errors import ConsistencyError, GuardError
from src.groups.permutations import cycle_type, edge_indexing, enumerate_partition_classes, pair_cycle_type_of_class
from src.oracle.canonical import all_canonical_masks, pair_group_elements, permute_weights
from src.pipeline.config import EnumerationConfig, get_config

logger = logging.getLogger("graphgf.oracle")


def _check_n(n: int) -> None:
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")


def _divide_exactly(total: int, n: int, what: str) -> int:
    quotient, rem = divmod(total, math.factorial(n))
    if rem:
        raise ConsistencyError(f"Burnside average for {what} at n={n} is not an integer")
    return quotient


def burnside_subset_count(n: int, i: int) -> int:
    """
    Orbits of i-edge subsets: class-weighted fixed-subset binomial sums divided by n!.

    Raises:
        ValueError: If i is outside 0..C(n, 2)
    """
    _check_n(n)
    idx = edge_indexing(n)
    if not 0 <= i <= idx.m:
        raise ValueError(f"edge count {i} outside 0..{idx.m}")
    total = sum(
        cls.class_size * fixed_subset_count(pair_cycle_type_of_class(cls.cycle_type, idx), i)
        for cls in enumerate_partition_classes(n)
    )
    return _divide_exactly(total, n, f"{i}-edge subsets")


def _fixed_weight_vectors(cycle_lengths: list[int], k: int) -> int:
    # weight vectors constant on cycles with total k: coin change over cycle lengths
    ways = [1] + [0] * k
    for length in cycle_lengths:
        for total in range(length, k + 1):
            ways[total] += ways[total - length]
    return ways[k]


def burnside_multigraph_count(n: int, k: int, *, config: EnumerationConfig | None = None) -> int:
    """Orbits of weight vectors summing to k, averaged element by element over S_n."""
    _check_n(n)
    if k < 0:
        raise ValueError(f"edge count must be >= 0, got {k}")
    total = sum(
        _fixed_weight_vectors(cycle_type(p).lengths(), k) for p in pair_group_elements(n, config=config)
    )
    return _divide_exactly(total, n, f"weight {k} multigraphs")


def brute_simple_counts(n: int, *, config: EnumerationConfig | None = None) -> GraphCountVector:
    """
    Classify all 2^m edge masks by minimum-image canonical form and bin by edge count.

    Raises:
        GuardError: If n exceeds guards.brute_simple_max_n
        ConsistencyError: If the class total disagrees with the Burnside count
    """
    _check_n(n)
    config = config or get_config()
    limit = config.guards.brute_simple_max_n
    if n > limit:
        raise GuardError("guards.brute_simple_max_n", n, limit)
    m = n * (n - 1) // 2
    representatives = np.unique(all_canonical_masks(n, config=config))
    counts = [0] * (m + 1)
    for rep in representatives.tolist():
        counts[bin(rep).count("1")] += 1

    expected = _divide_exactly(
        sum(2 ** cycle_type(p).num_cycles for p in pair_group_elements(n, config=config)), n, "all graphs"
    )
    if len(representatives) != expected:
        raise ConsistencyError(f"brute force found {len(representatives)} classes at n={n}, Burnside gives {expected}")
    logger.debug("brute simple", extra={"n": n, "classes": len(representatives)})

    vector = GraphCountVector(n=n, a=tuple(counts))
    vector.check_invariants()
    return vector


def _weak_compositions(k: int, parts: int) -> Iterator[tuple[int, ...]]:
    """Nonnegative vectors of the given length summing to k, via stars and bars."""
    if parts == 0:
        if k == 0:
            yield ()
        return
    for bars in itertools.combinations(range(k + parts - 1), parts - 1):
        prev = -1
        out = []
        for b in bars:
            out.append(b - prev - 1)
            prev = b
        out.append(k + parts - 1 - prev - 1)
        yield tuple(out)


def brute_multigraph_counts(
    n: int,
    max_degree: int,
    *,
    config: EnumerationConfig | None = None,
) -> MultigraphSeriesVector:
    """
    c[k] = number of orbits of weight vectors summing to k, for 0 <= k <= max_degree.

    Raises:
        GuardError: If n or max_degree exceeds its guard
        ConsistencyError: If an orbit count disagrees with its Burnside count
    """
    _check_n(n)
    if max_degree < 0:
        raise ValueError(f"max_degree must be >= 0, got {max_degree}")
    config = config or get_config()
    guards = config.guards
    if n > guards.brute_multi_max_n:
        raise GuardError("guards.brute_multi_max_n", n, guards.brute_multi_max_n)
    if max_degree > guards.brute_multi_max_degree:
        raise GuardError("guards.brute_multi_max_degree", max_degree, guards.brute_multi_max_degree)

    group = pair_group_elements(n, config=config)
    m = n * (n - 1) // 2
    counts = []
    for k in range(max_degree + 1):
        seen: set[tuple[int, ...]] = set()
        orbits = 0
        for w in _weak_compositions(k, m):
            if w in seen:
                continue
            orbits += 1
            seen.update(permute_weights(w, p) for p in group)
        expected = burnside_multigraph_count(n, k, config=config)
        if orbits != expected:
            raise ConsistencyError(f"brute force found {orbits} multigraphs with {k} edges at n={n}, Burnside gives {expected}")
        counts.append(orbits)

    vector = MultigraphSeriesVector(n=n, cutoff=max_degree, c=tuple(counts))
    vector.check_invariants()
    return vector
