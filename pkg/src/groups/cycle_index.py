"""Cycle index of the pair group S_n^(2), merged by pair cycle type."""
from __future__ import annotations

import math
from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction

from src.groups.permutations import (
    CycleType,
    edge_indexing,
    enumerate_partition_classes,
    pair_cycle_type_of_class,
)
from src.poly.exact import ExactPolynomial, poly_mul


@dataclass(frozen=True)
class CycleIndexTerm:
    """coefficient * prod_k s_k^(j_k) for one pair cycle type."""

    coefficient: Fraction
    pair_type: CycleType

    def monomial(self) -> str:
        parts = [f"s_{k}" if e == 1 else f"s_{k}^{e}" for k, e in self.pair_type.parts()]
        return "*".join(parts) if parts else "1"


def pair_cycle_index(n: int) -> list[CycleIndexTerm]:
    """
    Z(S_n^(2)) as a list of terms, one per distinct pair cycle type.

    Sums run over the n! elements of S_n (images counted with multiplicity), so
    classes that induce the same pair type are merged and the coefficients sum to 1.
    """
    idx = edge_indexing(n)
    weights: dict[CycleType, int] = defaultdict(int)
    order: list[CycleType] = []
    for cls in enumerate_partition_classes(n):
        pair_type = pair_cycle_type_of_class(cls.cycle_type, idx)
        if pair_type not in weights:
            order.append(pair_type)
        weights[pair_type] += cls.class_size
    group_order = math.factorial(n)
    return [CycleIndexTerm(Fraction(weights[t], group_order), t) for t in order]


def substitute_one_plus_z(pair_type: CycleType) -> ExactPolynomial:
    """prod_k (1 + z^k)^(j_k), each factor expanded by explicit binomial coefficients."""
    acc = ExactPolynomial.one()
    for k, e in pair_type.parts():
        expanded = [0] * (k * e + 1)
        for t in range(e + 1):
            expanded[k * t] = math.comb(e, t)
        acc = poly_mul(acc, ExactPolynomial(tuple(expanded)))
    return acc


def pair_cycle_type_closed_form(lam: CycleType) -> CycleType:
    """
    Pair cycle type from the classical product formula.

    Reads the cross-term exponent as j_r * j_t with gcd/lcm for (r,t), [r,t].
    Used to cross-check representative tracing; never the source of truth.
    """
    n = lam.degree
    m = n * (n - 1) // 2
    counts = [0] * max(m, 0)

    def add(length: int, multiplicity: int) -> None:
        if multiplicity:
            counts[length - 1] += multiplicity

    parts = lam.parts()
    for k, j in parts:
        # pairs inside a single k-cycle
        if k % 2:
            add(k, j * (k - 1) // 2)
        else:
            add(k // 2, j)
            add(k, j * (k - 2) // 2)
        # pairs across two distinct k-cycles
        add(k, k * math.comb(j, 2))
    for a, (r, jr) in enumerate(parts):
        for t, jt in parts[a + 1 :]:
            add(math.lcm(r, t), math.gcd(r, t) * jr * jt)
    return CycleType(tuple(counts))


def format_cycle_index(terms: list[CycleIndexTerm]) -> str:
    """`1/6 * s_1^3 + 1/2 * s_1*s_2 + 1/3 * s_3`."""
    return " + ".join(f"{t.coefficient} * {t.monomial()}" for t in terms)
