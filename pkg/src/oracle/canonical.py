"""
Minimum-image canonical forms under the pair group.

Masks are permuted through per-byte lookup tables so that a whole array of masks can be
moved by one permutation with a handful of numpy gathers.
"""
from __future__ import annotations

import itertools
from collections.abc import Sequence
from functools import lru_cache

import numpy as np

from src.errors import GuardError
from src.groups.permutations import PairPermutation, Permutation, edge_indexing, induce_pair_perm
from src.pipeline.config import EnumerationConfig, get_config

# row v holds the 8 bits of byte value v, least significant first
_BYTE_BITS = (np.arange(256, dtype=np.int64)[:, None] >> np.arange(8, dtype=np.int64)) & 1


class MaskPermuter:
    """Applies one pair permutation to m-bit edge masks."""

    def __init__(self, p: PairPermutation) -> None:
        self.permutation = p
        chunks = (p.m + 7) // 8
        tables = np.zeros((chunks, 256), dtype=np.int64)
        for b in range(chunks):
            width = min(8, p.m - 8 * b)
            weights = np.array([1 << p(8 * b + t) for t in range(width)], dtype=np.int64)
            tables[b] = _BYTE_BITS[:, :width] @ weights
        self.tables = tables
        self._rows = [row.tolist() for row in tables]

    def __call__(self, mask: int) -> int:
        out = 0
        for row in self._rows:
            out |= row[mask & 0xFF]
            mask >>= 8
        return out

    def apply_array(self, masks: np.ndarray) -> np.ndarray:
        out = np.zeros_like(masks)
        for b, table in enumerate(self.tables):
            out |= table[(masks >> (8 * b)) & 0xFF]
        return out


@lru_cache(maxsize=16)
def _pair_group(n: int) -> tuple[PairPermutation, ...]:
    idx = edge_indexing(n)
    return tuple(induce_pair_perm(Permutation(images), idx) for images in itertools.permutations(range(n)))


@lru_cache(maxsize=16)
def _mask_permuters(n: int) -> tuple[MaskPermuter, ...]:
    return tuple(MaskPermuter(p) for p in _pair_group(n))


def _check_group_size(n: int, config: EnumerationConfig | None) -> None:
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    limit = (config or get_config()).guards.permutation_max_n
    if n > limit:
        raise GuardError("guards.permutation_max_n", n, limit)


def pair_group_elements(n: int, *, config: EnumerationConfig | None = None) -> tuple[PairPermutation, ...]:
    """The n! induced pair permutations (cached per n)."""
    _check_group_size(n, config)
    return _pair_group(n)


def mask_permuters(n: int, *, config: EnumerationConfig | None = None) -> tuple[MaskPermuter, ...]:
    _check_group_size(n, config)
    return _mask_permuters(n)


def canonical_mask(mask: int, n: int, *, config: EnumerationConfig | None = None) -> int:
    """Smallest mask in the orbit of mask."""
    return min(permute(mask) for permute in mask_permuters(n, config=config))


def orbit_of_mask(mask: int, n: int, *, config: EnumerationConfig | None = None) -> set[int]:
    return {permute(mask) for permute in mask_permuters(n, config=config)}


def all_canonical_masks(n: int, *, config: EnumerationConfig | None = None) -> np.ndarray:
    """canon[x] = canonical_mask(x) for every x in 0..2^m - 1."""
    m = n * (n - 1) // 2
    permuters = mask_permuters(n, config=config)
    masks = np.arange(1 << m, dtype=np.int64)
    best = masks.copy()
    for permute in permuters:
        np.minimum(best, permute.apply_array(masks), out=best)
    return best


def permute_weights(w: Sequence[int], p: PairPermutation) -> tuple[int, ...]:
    """w'[p(s)] = w[s]."""
    out = [0] * len(w)
    for s, x in enumerate(w):
        out[p(s)] = x
    return tuple(out)


def canonical_weights(
    w: Sequence[int],
    n: int,
    *,
    config: EnumerationConfig | None = None,
) -> tuple[int, ...]:
    """Lexicographically smallest weight vector in the orbit of w."""
    group = pair_group_elements(n, config=config)
    if len(w) != group[0].m:
        raise ValueError(f"n={n} has {group[0].m} slots, weight vector has {len(w)}")
    return min(permute_weights(w, p) for p in group)
