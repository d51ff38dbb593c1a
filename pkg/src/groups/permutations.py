"""
Permutations of [n], conjugacy classes of S_n and the induced action on 2-subsets.

Vertices and edge slots are 0-based internally. Cycle notation passed to
`Permutation.from_cycles` is 1-based, matching how permutations are written by hand.
"""
from __future__ import annotations

import itertools
import math
from collections.abc import Iterator, Sequence
from dataclasses import dataclass, field
from functools import lru_cache

from src.errors import GuardError
from src.pipeline.config import EnumerationConfig, get_config


@dataclass(frozen=True)
class Permutation:
    """A bijection of {0..n-1} in one-line notation."""

    images: tuple[int, ...]

    def __post_init__(self) -> None:
        """Validate that images is a bijection."""
        n = len(self.images)
        if sorted(self.images) != list(range(n)):
            raise ValueError(f"images must be a permutation of 0..{n - 1}, got {self.images}")

    @property
    def n(self) -> int:
        return len(self.images)

    @classmethod
    def identity(cls, n: int) -> Permutation:
        return cls(tuple(range(n)))

    @classmethod
    def from_cycles(cls, n: int, cycles: Sequence[Sequence[int]]) -> Permutation:
        """
        Build a permutation from 1-based disjoint cycles, e.g. [(1, 2)] for the transposition (1 2).

        Args:
            n: Degree
            cycles: Disjoint cycles over labels 1..n; unlisted labels are fixed

        Returns:
            The permutation in 0-based one-line notation

        Raises:
            ValueError: If a label is out of range or cycles overlap
        """
        images = list(range(n))
        seen: set[int] = set()
        for cycle in cycles:
            for label in cycle:
                if not 1 <= label <= n:
                    raise ValueError(f"cycle label {label} outside 1..{n}")
                if label in seen:
                    raise ValueError(f"cycle label {label} appears twice")
                seen.add(label)
            for a, b in zip(cycle, itertools.chain(cycle[1:], cycle[:1])):
                images[a - 1] = b - 1
        return cls(tuple(images))

    def __call__(self, i: int) -> int:
        return self.images[i]

    def compose(self, other: Permutation) -> Permutation:
        """Return self * other, i.e. apply other first."""
        if other.n != self.n:
            raise ValueError(f"degree mismatch: {self.n} vs {other.n}")
        return Permutation(tuple(self.images[i] for i in other.images))

    def inverse(self) -> Permutation:
        inv = [0] * self.n
        for i, image in enumerate(self.images):
            inv[image] = i
        return Permutation(tuple(inv))

    def cycles(self) -> list[tuple[int, ...]]:
        return _cycles_of(self.images)


@dataclass(frozen=True)
class CycleType:
    """
    Cycle-length multiplicities of a permutation of degree N.

    counts[k - 1] is j_k, the number of cycles of length k.
    """

    counts: tuple[int, ...]

    def __post_init__(self) -> None:
        """Validate multiplicities."""
        if any(c < 0 for c in self.counts):
            raise ValueError(f"cycle counts must be non-negative, got {self.counts}")
        # normal form: exactly `degree` entries
        counts = tuple(self.counts)
        degree = sum(k * c for k, c in enumerate(counts, start=1))
        counts = (counts + (0,) * degree)[:degree]
        object.__setattr__(self, "counts", counts)

    @property
    def degree(self) -> int:
        return sum(k * c for k, c in enumerate(self.counts, start=1))

    @property
    def num_cycles(self) -> int:
        return sum(self.counts)

    def j(self, k: int) -> int:
        """Number of cycles of length k (0 beyond the stored range)."""
        if k < 1:
            raise ValueError(f"cycle length must be >= 1, got {k}")
        return self.counts[k - 1] if k <= len(self.counts) else 0

    def parts(self) -> list[tuple[int, int]]:
        """(length, multiplicity) pairs with non-zero multiplicity, ascending length."""
        return [(k, c) for k, c in enumerate(self.counts, start=1) if c]

    def lengths(self) -> list[int]:
        """Cycle lengths in non-increasing order (the partition)."""
        return [k for k, c in reversed(self.parts()) for _ in range(c)]

    @classmethod
    def from_lengths(cls, lengths: Sequence[int], degree: int | None = None) -> CycleType:
        """
        Build from a multiset of cycle lengths.

        Raises:
            ValueError: If a length is not positive or the lengths do not sum to degree
        """
        total = sum(lengths)
        if degree is None:
            degree = total
        if total != degree:
            raise ValueError(f"cycle lengths {list(lengths)} do not sum to degree {degree}")
        counts = [0] * degree
        for k in lengths:
            if k < 1:
                raise ValueError(f"cycle lengths must be positive, got {k}")
            counts[k - 1] += 1
        return cls(tuple(counts))

    def __str__(self) -> str:
        if not self.counts:
            return "()"
        return " ".join(f"{k}^{c}" for k, c in self.parts())


@dataclass(frozen=True)
class EdgeIndexing:
    """Lexicographic numbering of the 2-subsets of {0..n-1}: {0,1},{0,2},...,{n-2,n-1}."""

    n: int
    pairs: tuple[tuple[int, int], ...] = field(init=False, repr=False)
    _slots: dict[tuple[int, int], int] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError(f"n must be >= 1, got {self.n}")
        pairs = tuple(itertools.combinations(range(self.n), 2))
        object.__setattr__(self, "pairs", pairs)
        object.__setattr__(self, "_slots", {pair: s for s, pair in enumerate(pairs)})

    @property
    def m(self) -> int:
        return len(self.pairs)

    def pair_of(self, slot: int) -> tuple[int, int]:
        return self.pairs[slot]

    def slot_of(self, i: int, j: int) -> int:
        if i == j:
            raise ValueError(f"a 2-subset needs distinct vertices, got {{{i}, {j}}}")
        return self._slots[(i, j) if i < j else (j, i)]


@lru_cache(maxsize=64)
def edge_indexing(n: int) -> EdgeIndexing:
    return EdgeIndexing(n)


@dataclass(frozen=True)
class PairPermutation:
    """Permutation of the m edge slots induced by a vertex permutation."""

    images: tuple[int, ...]
    n: int

    def __post_init__(self) -> None:
        """Validate slot count and bijectivity."""
        m = self.n * (self.n - 1) // 2
        if len(self.images) != m:
            raise ValueError(f"expected {m} slot images for n={self.n}, got {len(self.images)}")
        if sorted(self.images) != list(range(m)):
            raise ValueError("slot images must form a permutation")

    @property
    def m(self) -> int:
        return len(self.images)

    def __call__(self, slot: int) -> int:
        return self.images[slot]

    def compose(self, other: PairPermutation) -> PairPermutation:
        """Return self * other, i.e. apply other first."""
        if other.n != self.n:
            raise ValueError(f"degree mismatch: {self.n} vs {other.n}")
        return PairPermutation(tuple(self.images[s] for s in other.images), self.n)


@dataclass(frozen=True)
class PartitionClass:
    """A conjugacy class of S_n: its cycle type and exact size."""

    cycle_type: CycleType
    class_size: int


def _cycles_of(images: Sequence[int]) -> list[tuple[int, ...]]:
    seen = [False] * len(images)
    cycles = []
    for start in range(len(images)):
        if seen[start]:
            continue
        cycle = []
        i = start
        while not seen[i]:
            seen[i] = True
            cycle.append(i)
            i = images[i]
        cycles.append(tuple(cycle))
    return cycles


def cycle_type(p: Permutation | PairPermutation | Sequence[int]) -> CycleType:
    """
    Cycle type of a permutation of any degree.

    Args:
        p: A Permutation, a PairPermutation, or raw one-line images

    Returns:
        CycleType with counts[k - 1] = number of k-cycles
    """
    images = p.images if isinstance(p, (Permutation, PairPermutation)) else tuple(p)
    counts = [0] * len(images)
    for cycle in _cycles_of(images):
        counts[len(cycle) - 1] += 1
    return CycleType(tuple(counts))


def enumerate_permutations(n: int, *, config: EnumerationConfig | None = None) -> Iterator[Permutation]:
    """
    Yield all n! permutations of {0..n-1}.

    Args:
        n: Degree (>= 1)
        config: Guard source; defaults to the cached config

    Yields:
        Permutations in lexicographic order of their images

    Raises:
        ValueError: If n < 1
        GuardError: If n exceeds guards.permutation_max_n
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    limit = (config or get_config()).guards.permutation_max_n
    if n > limit:
        raise GuardError(
            "guards.permutation_max_n",
            n,
            limit,
            "Iterating all n! permutations is refused; use the class-summed path instead",
        )
    for images in itertools.permutations(range(n)):
        yield Permutation(images)


def _partitions(n: int, largest: int) -> Iterator[tuple[int, ...]]:
    if n == 0:
        yield ()
        return
    for k in range(min(n, largest), 0, -1):
        for rest in _partitions(n - k, k):
            yield (k,) + rest


def class_size(ct: CycleType) -> int:
    """n! / prod_k (k^{j_k} j_k!)."""
    denominator = 1
    for k, c in ct.parts():
        denominator *= k**c * math.factorial(c)
    return math.factorial(ct.degree) // denominator


def enumerate_partition_classes(n: int) -> list[PartitionClass]:
    """
    One PartitionClass per integer partition of n, ordered 1^n first and (n) last.

    Args:
        n: Degree (>= 1)

    Returns:
        p(n) classes whose sizes sum to n!

    Raises:
        ValueError: If n < 1
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    partitions = sorted(_partitions(n, n))
    classes = []
    for lengths in partitions:
        ct = CycleType.from_lengths(lengths, n)
        classes.append(PartitionClass(cycle_type=ct, class_size=class_size(ct)))
    return classes


def partition_count(n: int) -> int:
    """p(n) via Euler's pentagonal-number recurrence."""
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    p = [1] + [0] * n
    for i in range(1, n + 1):
        total = 0
        k = 1
        while True:
            g1 = k * (3 * k - 1) // 2
            if g1 > i:
                break
            sign = 1 if k % 2 else -1
            total += sign * p[i - g1]
            g2 = k * (3 * k + 1) // 2
            if g2 <= i:
                total += sign * p[i - g2]
            k += 1
        p[i] = total
    return p[n]


def class_representative(ct: CycleType) -> Permutation:
    """Cycles of decreasing length laid over consecutive vertices: (0 1 .. k-1)(k ..)..."""
    images = list(range(ct.degree))
    start = 0
    for k in ct.lengths():
        for offset in range(k):
            images[start + offset] = start + (offset + 1) % k
        start += k
    return Permutation(tuple(images))


def induce_pair_perm(sigma: Permutation, idx: EdgeIndexing) -> PairPermutation:
    """
    The permutation {i,j} -> {sigma i, sigma j} of edge slots.

    Args:
        sigma: Vertex permutation
        idx: Edge indexing for the same n

    Returns:
        PairPermutation on the C(n, 2) slots

    Raises:
        ValueError: If sigma and idx disagree on n
    """
    if sigma.n != idx.n:
        raise ValueError(f"degree mismatch: permutation has n={sigma.n}, indexing has n={idx.n}")
    images = tuple(idx.slot_of(sigma(i), sigma(j)) for i, j in idx.pairs)
    return PairPermutation(images, idx.n)


def pair_cycle_type_of_class(lam: CycleType, idx: EdgeIndexing) -> CycleType:
    """
    Pair cycle type of a class, traced on its canonical representative.

    Returns:
        Cycle type of degree C(n, 2), the same for every member of the class

    Raises:
        ValueError: If lam is not a partition of idx.n
    """
    if lam.degree != idx.n:
        raise ValueError(f"partition of {lam.degree} does not match n={idx.n}")
    return cycle_type(induce_pair_perm(class_representative(lam), idx))
