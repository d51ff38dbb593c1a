"""
Polynomial functions on weighted graphs and the group-averaging operator.

Variable x_{s+1} is the weight of edge slot s in the lexicographic slot order.
"""
from __future__ import annotations

import logging
import math
from collections import defaultdict
from collections.abc import Iterable, Mapping
from dataclasses import dataclass, field
from fractions import Fraction

from src.errors import GuardError
from src.groups.permutations import PairPermutation, edge_indexing, enumerate_permutations, induce_pair_perm
from src.pipeline.config import EnumerationConfig, get_config

logger = logging.getLogger("graphgf.invariants")


@dataclass(frozen=True)
class EdgeMask:
    """A simple graph as an m-bit set; bit s is set iff slot s carries an edge."""

    n: int
    bits: int

    def __post_init__(self) -> None:
        if self.bits < 0 or self.bits >> self.m:
            raise ValueError(f"mask {self.bits:#x} does not fit in {self.m} slots")

    @property
    def m(self) -> int:
        return self.n * (self.n - 1) // 2

    @property
    def popcount(self) -> int:
        return bin(self.bits).count("1")

    def slots(self) -> tuple[int, ...]:
        return tuple(s for s in range(self.m) if self.bits >> s & 1)

    def apply(self, p: PairPermutation) -> EdgeMask:
        """Move the edge in slot s to slot p(s)."""
        return EdgeMask.from_slots(self.n, (p(s) for s in self.slots()))

    @classmethod
    def from_slots(cls, n: int, slots: Iterable[int]) -> EdgeMask:
        bits = 0
        for s in slots:
            bits |= 1 << s
        return cls(n, bits)


@dataclass(frozen=True, order=True)
class Monomial:
    """x_1^e_1 * ... * x_m^e_m stored as its exponent vector."""

    exponents: tuple[int, ...]

    def __post_init__(self) -> None:
        if any(e < 0 for e in self.exponents):
            raise ValueError(f"exponents must be >= 0, got {self.exponents}")

    @property
    def m(self) -> int:
        return len(self.exponents)

    @property
    def degree(self) -> int:
        return sum(self.exponents)

    @classmethod
    def constant(cls, m: int) -> Monomial:
        return cls((0,) * m)

    @classmethod
    def from_vars(cls, m: int, powers: Mapping[int, int]) -> Monomial:
        """Build from 1-based variable indices, e.g. {1: 2, 2: 1} is x_1^2*x_2."""
        exponents = [0] * m
        for var, e in powers.items():
            if not 1 <= var <= m:
                raise ValueError(f"variable x_{var} outside x_1..x_{m}")
            exponents[var - 1] += e
        return cls(tuple(exponents))

    @classmethod
    def parse(cls, m: int, text: str) -> Monomial:
        """Read `x_1^2*x_2` (factors may repeat, order is free); `1` is the constant."""
        powers: dict[int, int] = defaultdict(int)
        text = text.strip()
        if text == "1":
            return cls.constant(m)
        for factor in text.split("*"):
            factor = factor.strip()
            base, _, exp = factor.partition("^")
            if not base.startswith("x_"):
                raise ValueError(f"cannot read factor {factor!r}")
            powers[int(base[2:])] += int(exp) if exp else 1
        return cls.from_vars(m, powers)

    def apply(self, p: PairPermutation) -> Monomial:
        """Relabel variables: the exponent at slot s moves to slot p(s)."""
        if p.m != self.m:
            raise ValueError(f"permutation acts on {p.m} slots, monomial has {self.m}")
        out = [0] * self.m
        for s, e in enumerate(self.exponents):
            out[p(s)] = e
        return Monomial(tuple(out))

    def gamma_reduce(self) -> Monomial:
        return Monomial(tuple(1 if e else 0 for e in self.exponents))

    def __str__(self) -> str:
        factors = [f"x_{s + 1}" if e == 1 else f"x_{s + 1}^{e}" for s, e in enumerate(self.exponents) if e]
        return "*".join(factors) if factors else "1"


def _sort_key(mono: Monomial) -> tuple[int, ...]:
    return tuple(-e for e in mono.exponents)


@dataclass(frozen=True)
class SymPoly:
    """Sparse polynomial with exact rational coefficients; zero coefficients are dropped."""

    terms: Mapping[Monomial, Fraction] = field(default_factory=dict)

    def __post_init__(self) -> None:
        object.__setattr__(
            self, "terms", {mono: Fraction(c) for mono, c in self.terms.items() if c != 0}
        )

    @classmethod
    def from_monomial(cls, mono: Monomial, coefficient: Fraction | int = 1) -> SymPoly:
        return cls({mono: Fraction(coefficient)})

    @classmethod
    def uniform(cls, monomials: Iterable[Monomial], coefficient: Fraction) -> SymPoly:
        """coefficient * (sum of the given monomials), repeats accumulating."""
        terms: dict[Monomial, Fraction] = defaultdict(Fraction)
        for mono in monomials:
            terms[mono] += coefficient
        return cls(terms)

    def coefficient(self, mono: Monomial) -> Fraction:
        return self.terms.get(mono, Fraction(0))

    def __len__(self) -> int:
        return len(self.terms)

    def __add__(self, other: SymPoly) -> SymPoly:
        terms: dict[Monomial, Fraction] = defaultdict(Fraction, self.terms)
        for mono, c in other.terms.items():
            terms[mono] += c
        return SymPoly(terms)

    def scale(self, factor: Fraction | int) -> SymPoly:
        return SymPoly({mono: c * factor for mono, c in self.terms.items()})

    def apply(self, p: PairPermutation) -> SymPoly:
        return SymPoly({mono.apply(p): c for mono, c in self.terms.items()})

    def gamma(self) -> SymPoly:
        """Apply the reduction termwise; distinct monomials may merge."""
        terms: dict[Monomial, Fraction] = defaultdict(Fraction)
        for mono, c in self.terms.items():
            terms[mono.gamma_reduce()] += c
        return SymPoly(terms)

    def first_difference(self, other: SymPoly) -> tuple[Monomial, Fraction, Fraction] | None:
        """The smallest monomial on which the two disagree, with both coefficients."""
        for mono in sorted(set(self.terms) | set(other.terms), key=_sort_key):
            a, b = self.coefficient(mono), other.coefficient(mono)
            if a != b:
                return mono, a, b
        return None

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        return " + ".join(f"{c} * {mono}" for mono, c in sorted(self.terms.items(), key=lambda t: _sort_key(t[0])))


def gamma_reduce(mono: Monomial) -> Monomial:
    """x_i^p -> x_i for every p >= 1; the constant monomial is left alone."""
    return mono.gamma_reduce()


def pair_group(n: int, *, config: EnumerationConfig | None = None) -> list[PairPermutation]:
    """All n! induced pair permutations, images counted with multiplicity."""
    idx = edge_indexing(n)
    return [induce_pair_perm(sigma, idx) for sigma in enumerate_permutations(n, config=config)]


def reynolds(mono: Monomial, n: int, *, config: EnumerationConfig | None = None) -> SymPoly:
    """
    (1/n!) * sum over sigma in S_n of sigma' applied to mono.

    Raises:
        ValueError: If the monomial does not have C(n, 2) variables
        GuardError: If n exceeds guards.reynolds_max_n
    """
    config = config or get_config()
    limit = config.guards.reynolds_max_n
    if n > limit:
        raise GuardError("guards.reynolds_max_n", n, limit)
    m = n * (n - 1) // 2
    if mono.m != m:
        raise ValueError(f"n={n} has {m} variables, monomial has {mono.m}")
    group = pair_group(n, config=config)
    logger.debug("reynolds", extra={"n": n, "elements": len(group)})
    return SymPoly.uniform((mono.apply(p) for p in group), Fraction(1, math.factorial(n)))
