"""
Generating functions of simple graphs and multigraphs counted by edges.

Three routes to g_n(z):
  - determinant ratio averaged over S_n, one summand per conjugacy class
  - Harary substitution s_k -> 1 + z^k into the pair cycle index
  - literal per-element average over all n! induced pair permutations
and the Molien average for the multigraph series m_n(z).
"""
from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import partial

from src.enumeration.parallel import map_classes, sum_vectors
from src.errors import ConsistencyError, GuardError
from src.groups.cycle_index import pair_cycle_index, substitute_one_plus_z
from src.groups.permutations import (
    CycleType,
    PartitionClass,
    cycle_type,
    edge_indexing,
    enumerate_partition_classes,
    enumerate_permutations,
    induce_pair_perm,
    pair_cycle_type_of_class,
)
from src.pipeline.config import EnumerationConfig, get_config
from src.poly.exact import (
    ExactPolynomial,
    ExactRationalPolynomial,
    TruncatedSeries,
    binomial_power,
    inverse_product_coeffs,
    scale_and_assert_integer,
)

logger = logging.getLogger("graphgf.genfunc")


@dataclass(frozen=True)
class GraphCountVector:
    """a[i] = number of simple graphs with n nodes and i edges, 0 <= i <= m."""

    n: int
    a: tuple[int, ...]

    @property
    def m(self) -> int:
        return self.n * (self.n - 1) // 2

    @property
    def total(self) -> int:
        """g_n(1)."""
        return sum(self.a)

    def coefficient(self, i: int) -> int:
        return self.a[i] if 0 <= i < len(self.a) else 0

    def as_polynomial(self) -> ExactPolynomial:
        return ExactPolynomial(self.a)

    def check_invariants(self) -> None:
        """
        Raises:
            ConsistencyError: If length, end values, positivity or complement symmetry fail
        """
        m = self.m
        if len(self.a) != m + 1:
            raise ConsistencyError(f"g_{self.n} has {len(self.a)} coefficients, expected {m + 1}")
        if self.a[0] != 1 or self.a[m] != 1:
            raise ConsistencyError(f"g_{self.n} must start and end with 1, got {self.a[0]} and {self.a[m]}")
        for i, c in enumerate(self.a):
            if c <= 0:
                raise ConsistencyError(f"g_{self.n} coefficient of z^{i} is {c}, expected positive")
            if c != self.a[m - i]:
                raise ConsistencyError(
                    f"g_{self.n} breaks complement symmetry: a[{i}]={c} but a[{m - i}]={self.a[m - i]}"
                )


@dataclass(frozen=True)
class MultigraphSeriesVector:
    """c[k] = number of multigraphs with n nodes and k edges counted with multiplicity."""

    n: int
    cutoff: int
    c: tuple[int, ...]

    def check_invariants(self) -> None:
        """
        Raises:
            ConsistencyError: If c[0] != 1 or, for n >= 2, c decreases
        """
        if len(self.c) != self.cutoff + 1:
            raise ConsistencyError(f"m_{self.n} has {len(self.c)} coefficients, expected {self.cutoff + 1}")
        if self.c[0] != 1:
            raise ConsistencyError(f"m_{self.n} must start with 1, got {self.c[0]}")
        if self.n >= 2:
            for k in range(1, len(self.c)):
                if self.c[k] < self.c[k - 1]:
                    raise ConsistencyError(f"m_{self.n} decreases at z^{k}: {self.c[k - 1]} -> {self.c[k]}")


def _check_n(n: int) -> None:
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")


def trace_genfunc_of_element(alpha_type: CycleType) -> ExactPolynomial:
    """sum_i Tr(A^(i)) z^i = prod_k (1 + z^k)^(j_k): fixed i-edge subsets by size."""
    return binomial_power(alpha_type.parts())


def fixed_subset_count(alpha_type: CycleType, i: int) -> int:
    """
    Number of i-element slot subsets fixed by a permutation of the given cycle type.

    A fixed subset is a union of whole cycles; sum over beta with sum k*beta_k = i of
    prod_k C(j_k, beta_k).

    Raises:
        ValueError: If i is outside 0..degree
    """
    if not 0 <= i <= alpha_type.degree:
        raise ValueError(f"edge count {i} outside 0..{alpha_type.degree}")
    parts = alpha_type.parts()

    def count(pos: int, remaining: int) -> int:
        if pos == len(parts):
            return 1 if remaining == 0 else 0
        k, j = parts[pos]
        total = 0
        for beta in range(min(j, remaining // k) + 1):
            total += math.comb(j, beta) * count(pos + 1, remaining - k * beta)
        return total

    return count(0, i)


def small_trace_formula(alpha_type: CycleType, i: int) -> int:
    """Closed forms of Tr(A^(i)) for i <= 4."""
    j = alpha_type.j
    if i == 0:
        return 1
    if i == 1:
        return j(1)
    if i == 2:
        return math.comb(j(1), 2) + j(2)
    if i == 3:
        return math.comb(j(1), 3) + j(1) * j(2) + j(3)
    if i == 4:
        return math.comb(j(1), 4) + math.comb(j(1), 2) * j(2) + math.comb(j(2), 2) + j(1) * j(3) + j(4)
    raise ValueError(f"closed form only available for i <= 4, got {i}")


def _det_ratio_summand(cls: PartitionClass, n: int) -> list[int]:
    pair_type = pair_cycle_type_of_class(cls.cycle_type, edge_indexing(n))
    return [cls.class_size * c for c in trace_genfunc_of_element(pair_type).coeffs]


def _molien_summand(cls: PartitionClass, n: int, cutoff: int) -> list[int]:
    pair_type = pair_cycle_type_of_class(cls.cycle_type, edge_indexing(n))
    return [cls.class_size * c for c in inverse_product_coeffs(pair_type, cutoff)]


def _to_count_vector(n: int, poly: ExactPolynomial) -> GraphCountVector:
    m = n * (n - 1) // 2
    coeffs = poly.coeffs + (0,) * (m + 1 - len(poly.coeffs))
    vector = GraphCountVector(n=n, a=coeffs)
    vector.check_invariants()
    return vector


def simple_genfunc_det(n: int, *, config: EnumerationConfig | None = None) -> GraphCountVector:
    """
    g_n(z) = (1/n!) sum_sigma det(1 - A z^2) / det(1 - A z), summed per conjugacy class.

    Each ratio is taken in its factored form prod (1 + z^k)^(j_k); integrality of the
    final division by n! is asserted.
    """
    _check_n(n)
    config = config or get_config()
    classes = enumerate_partition_classes(n)
    logger.debug("det pipeline", extra={"n": n, "classes": len(classes)})
    summands = map_classes(partial(_det_ratio_summand, n=n), classes, config=config)
    m = n * (n - 1) // 2
    acc = ExactPolynomial(tuple(sum_vectors(summands, m + 1)))
    return _to_count_vector(n, scale_and_assert_integer(acc, math.factorial(n)))


def simple_genfunc_harary(n: int) -> GraphCountVector:
    """g_n(z) = Z(S_n^(2); s_k -> 1 + z^k), one substitution per cycle-index monomial."""
    _check_n(n)
    acc = ExactRationalPolynomial.zero()
    for term in pair_cycle_index(n):
        acc = acc + ExactRationalPolynomial.from_polynomial(substitute_one_plus_z(term.pair_type), term.coefficient)
    return _to_count_vector(n, scale_and_assert_integer(acc, 1))


def simple_genfunc_elementwise(
    n: int,
    *,
    max_n: int | None = None,
    config: EnumerationConfig | None = None,
) -> GraphCountVector:
    """
    g_n(z) as the literal average over all n! sigma of the trace generating polynomial of sigma'.

    Raises:
        GuardError: If n exceeds the element guard
    """
    _check_n(n)
    config = config or get_config()
    limit = max_n if max_n is not None else config.guards.elementwise_max_n
    if n > limit:
        raise GuardError(
            "guards.elementwise_max_n",
            n,
            limit,
            "Use --method det or --method harary for the class-summed computation",
        )
    idx = edge_indexing(n)
    acc = [0] * (idx.m + 1)
    elements = 0
    for sigma in enumerate_permutations(n, config=config):
        for i, c in enumerate(trace_genfunc_of_element(cycle_type(induce_pair_perm(sigma, idx))).coeffs):
            acc[i] += c
        elements += 1
    logger.debug("elementwise pipeline", extra={"n": n, "elements": elements})
    return _to_count_vector(n, scale_and_assert_integer(ExactPolynomial(tuple(acc)), math.factorial(n)))


def multigraph_series(
    n: int,
    cutoff: int | None = None,
    *,
    config: EnumerationConfig | None = None,
) -> MultigraphSeriesVector:
    """
    m_n(z) = (1/n!) sum_sigma 1 / det(1 - A z) modulo z^(cutoff + 1), per conjugacy class.

    The cutoff defaults to m = C(n, 2).
    """
    _check_n(n)
    config = config or get_config()
    if cutoff is None:
        cutoff = n * (n - 1) // 2
    if cutoff < 0:
        raise ValueError(f"cutoff must be >= 0, got {cutoff}")
    classes = enumerate_partition_classes(n)
    summands = map_classes(partial(_molien_summand, n=n, cutoff=cutoff), classes, config=config)
    acc = TruncatedSeries(tuple(Fraction(c) for c in sum_vectors(summands, cutoff + 1)), cutoff)
    series = scale_and_assert_integer(acc, math.factorial(n))
    vector = MultigraphSeriesVector(n=n, cutoff=cutoff, c=series.integer_coeffs())
    vector.check_invariants()
    return vector


def total_graph_count(n: int) -> int:
    """g_n(1) = (1/n!) sum over classes of class_size * 2^(number of pair cycles)."""
    _check_n(n)
    idx = edge_indexing(n)
    acc = sum(
        cls.class_size * 2 ** pair_cycle_type_of_class(cls.cycle_type, idx).num_cycles
        for cls in enumerate_partition_classes(n)
    )
    total, rem = divmod(acc, math.factorial(n))
    if rem:
        raise ConsistencyError(f"total graph count for n={n} is not an integer")
    return total
