"""
Exact univariate polynomial and truncated power-series arithmetic.

Integers and fractions only; no floating point enters this module.
"""
from __future__ import annotations

from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from fractions import Fraction
from typing import overload

from src.errors import IntegralityError
from src.groups.permutations import CycleType


def _strip(coeffs: Iterable) -> tuple:
    out = list(coeffs)
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


@dataclass(frozen=True)
class ExactPolynomial:
    """Dense integer polynomial; coeffs[i] is the coefficient of z^i. Zero is ()."""

    coeffs: tuple[int, ...]

    def __post_init__(self) -> None:
        for c in self.coeffs:
            if isinstance(c, bool) or not isinstance(c, int):
                raise TypeError(f"coefficients must be int, got {type(c).__name__}")
        object.__setattr__(self, "coeffs", _strip(self.coeffs))

    @classmethod
    def from_coeffs(cls, coeffs: Iterable[int]) -> ExactPolynomial:
        return cls(tuple(coeffs))

    @classmethod
    def one(cls) -> ExactPolynomial:
        return cls((1,))

    @classmethod
    def monomial(cls, k: int, c: int = 1) -> ExactPolynomial:
        """c * z^k."""
        return cls((0,) * k + (c,))

    @property
    def degree(self) -> int:
        """-1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def coefficient(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def __add__(self, other: ExactPolynomial) -> ExactPolynomial:
        size = max(len(self.coeffs), len(other.coeffs))
        return ExactPolynomial(tuple(self.coefficient(i) + other.coefficient(i) for i in range(size)))

    def __neg__(self) -> ExactPolynomial:
        return ExactPolynomial(tuple(-c for c in self.coeffs))

    def __sub__(self, other: ExactPolynomial) -> ExactPolynomial:
        return self + (-other)

    def __mul__(self, other: ExactPolynomial | int) -> ExactPolynomial:
        if isinstance(other, int):
            return ExactPolynomial(tuple(c * other for c in self.coeffs))
        return poly_mul(self, other)

    __rmul__ = __mul__

    def evaluate(self, z: int | Fraction) -> int | Fraction:
        acc: int | Fraction = 0
        for c in reversed(self.coeffs):
            acc = acc * z + c
        return acc

    def substitute_power(self, k: int) -> ExactPolynomial:
        """p(z^k)."""
        if k < 1:
            raise ValueError(f"power must be >= 1, got {k}")
        out = [0] * (k * self.degree + 1) if self.coeffs else []
        for i, c in enumerate(self.coeffs):
            out[i * k] = c
        return ExactPolynomial(tuple(out))

    def __str__(self) -> str:
        return format_polynomial(self.coeffs)


@dataclass(frozen=True)
class ExactRationalPolynomial:
    """Dense polynomial with Fraction coefficients (always in lowest terms)."""

    coeffs: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "coeffs", _strip(Fraction(c) for c in self.coeffs))

    @classmethod
    def zero(cls) -> ExactRationalPolynomial:
        return cls(())

    @classmethod
    def from_polynomial(cls, p: ExactPolynomial, scale: Fraction | int = 1) -> ExactRationalPolynomial:
        return cls(tuple(Fraction(c) * scale for c in p.coeffs))

    def coefficient(self, i: int) -> Fraction:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else Fraction(0)

    def __add__(self, other: ExactRationalPolynomial) -> ExactRationalPolynomial:
        size = max(len(self.coeffs), len(other.coeffs))
        return ExactRationalPolynomial(
            tuple(self.coefficient(i) + other.coefficient(i) for i in range(size))
        )


@dataclass(frozen=True)
class TruncatedSeries:
    """Power series known modulo z^(cutoff + 1), Fraction coefficients."""

    coeffs: tuple[Fraction, ...]
    cutoff: int

    def __post_init__(self) -> None:
        if self.cutoff < 0:
            raise ValueError(f"cutoff must be >= 0, got {self.cutoff}")
        coeffs = tuple(Fraction(c) for c in self.coeffs[: self.cutoff + 1])
        coeffs = coeffs + (Fraction(0),) * (self.cutoff + 1 - len(coeffs))
        object.__setattr__(self, "coeffs", coeffs)

    @classmethod
    def from_polynomial(cls, p: ExactPolynomial, cutoff: int) -> TruncatedSeries:
        return cls(tuple(Fraction(c) for c in p.coeffs), cutoff)

    def _check_cutoff(self, other: TruncatedSeries) -> None:
        if other.cutoff != self.cutoff:
            raise ValueError(f"cutoff mismatch: {self.cutoff} vs {other.cutoff}")

    def __add__(self, other: TruncatedSeries) -> TruncatedSeries:
        self._check_cutoff(other)
        return TruncatedSeries(tuple(a + b for a, b in zip(self.coeffs, other.coeffs)), self.cutoff)

    def __mul__(self, other: TruncatedSeries) -> TruncatedSeries:
        self._check_cutoff(other)
        out = [Fraction(0)] * (self.cutoff + 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j in range(self.cutoff + 1 - i):
                out[i + j] += a * other.coeffs[j]
        return TruncatedSeries(tuple(out), self.cutoff)

    def scale(self, factor: Fraction | int) -> TruncatedSeries:
        return TruncatedSeries(tuple(c * factor for c in self.coeffs), self.cutoff)

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.coeffs)

    def integer_coeffs(self) -> tuple[int, ...]:
        """
        Raises:
            IntegralityError: If a coefficient is not an integer
        """
        for i, c in enumerate(self.coeffs):
            if c.denominator != 1:
                raise IntegralityError(i, c, 1)
        return tuple(int(c) for c in self.coeffs)


def poly_mul(a: ExactPolynomial, b: ExactPolynomial) -> ExactPolynomial:
    """
    Schoolbook product; deg(ab) = deg a + deg b.

    Args:
        a: Left factor
        b: Right factor

    Returns:
        The exact product, or the zero polynomial if either factor is zero
    """
    if a.is_zero() or b.is_zero():
        return ExactPolynomial(())
    out = [0] * (len(a.coeffs) + len(b.coeffs) - 1)
    for i, x in enumerate(a.coeffs):
        if x == 0:
            continue
        for j, y in enumerate(b.coeffs):
            out[i + j] += x * y
    return ExactPolynomial(tuple(out))


def poly_divmod(a: ExactPolynomial, b: ExactPolynomial) -> tuple[ExactPolynomial, ExactPolynomial]:
    """
    Long division in Z[z]: a = q*b + r with deg r < deg b.

    Args:
        a: Dividend
        b: Divisor, non-zero; its leading coefficient must divide every quotient step

    Returns:
        Tuple of (quotient, remainder)

    Raises:
        ZeroDivisionError: If b is zero
        ArithmeticError: If a step needs a non-integer quotient coefficient
    """
    if b.is_zero():
        raise ZeroDivisionError("polynomial division by zero")
    rem = list(a.coeffs)
    lead = b.coeffs[-1]
    db = b.degree
    quot = [0] * max(len(rem) - db, 0)
    for shift in range(len(rem) - 1 - db, -1, -1):
        top = rem[shift + db]
        if top == 0:
            continue
        q, r = divmod(top, lead)
        if r:
            raise ArithmeticError(f"quotient coefficient {top}/{lead} at z^{shift} is not an integer")
        quot[shift] = q
        for i, c in enumerate(b.coeffs):
            rem[shift + i] -= q * c
    return ExactPolynomial(tuple(quot)), ExactPolynomial(tuple(rem))


def exact_divide(a: ExactPolynomial, b: ExactPolynomial) -> ExactPolynomial:
    """
    a / b when b divides a in Z[z].

    Returns:
        The quotient q with q*b = a

    Raises:
        ArithmeticError: If the division leaves a remainder
    """
    q, r = poly_divmod(a, b)
    if not r.is_zero():
        raise ArithmeticError(f"{b} does not divide {a}; remainder {r}")
    return q


def binomial_power(base_exponent_pairs: Iterable[tuple[int, int]]) -> ExactPolynomial:
    """
    prod (1 + z^k)^e, built by repeated in-place shift-and-add.

    Args:
        base_exponent_pairs: (k, e) pairs, typically CycleType.parts() of a pair permutation

    Returns:
        The product as an integer polynomial of degree sum k*e

    Raises:
        ValueError: If some k < 1 or e < 0
    """
    pairs = list(base_exponent_pairs)
    for k, e in pairs:
        if k < 1 or e < 0:
            raise ValueError(f"need k >= 1 and e >= 0, got (k={k}, e={e})")
    total = sum(k * e for k, e in pairs)
    c = [0] * (total + 1)
    c[0] = 1
    top = 0
    for k, e in pairs:
        for _ in range(e):
            top += k
            for i in range(top, k - 1, -1):
                c[i] += c[i - k]
    return ExactPolynomial(tuple(c))


def inverse_product_coeffs(ct: CycleType, cutoff: int) -> list[int]:
    """
    Integer coefficients of prod_k (1 - z^k)^(-j_k) up to z^cutoff.

    Args:
        ct: Cycle type supplying the exponents j_k
        cutoff: Highest degree kept (>= 0)

    Returns:
        cutoff + 1 coefficients, ascending degree

    Raises:
        ValueError: If cutoff < 0
    """
    if cutoff < 0:
        raise ValueError(f"cutoff must be >= 0, got {cutoff}")
    c = [0] * (cutoff + 1)
    c[0] = 1
    for k, e in ct.parts():
        for _ in range(e):
            # multiply by 1/(1 - z^k): prefix sums with stride k
            for i in range(k, cutoff + 1):
                c[i] += c[i - k]
    return c


def series_inverse_product(ct: CycleType, cutoff: int) -> TruncatedSeries:
    """1 / det(1 - A z) = prod_k (1 - z^k)^(-j_k) modulo z^(cutoff + 1)."""
    return TruncatedSeries(tuple(Fraction(c) for c in inverse_product_coeffs(ct, cutoff)), cutoff)


def cycle_factor_product(ct: CycleType, power: int = 1) -> ExactPolynomial:
    """
    prod_k (1 - z^(k * power))^(j_k), the factored form of det(1 - A z^power).

    Args:
        ct: Cycle type of the pair permutation
        power: Exponent applied to z (1 or 2 in practice)

    Returns:
        The expanded product
    """
    acc = ExactPolynomial.one()
    for k, e in ct.parts():
        factor = ExactPolynomial.one() - ExactPolynomial.monomial(k * power)
        for _ in range(e):
            acc = poly_mul(acc, factor)
    return acc


@overload
def scale_and_assert_integer(acc: ExactPolynomial | ExactRationalPolynomial, divisor: int) -> ExactPolynomial: ...


@overload
def scale_and_assert_integer(acc: TruncatedSeries, divisor: int) -> TruncatedSeries: ...


def scale_and_assert_integer(acc, divisor):
    """
    Divide every coefficient by divisor and insist the result is integral.

    Args:
        acc: Class-weighted accumulator (polynomial or truncated series)
        divisor: Usually n!

    Returns:
        An ExactPolynomial, or a TruncatedSeries when given one

    Raises:
        ZeroDivisionError: If divisor is 0
        IntegralityError: If some coefficient is not an integer after division
    """
    if divisor == 0:
        raise ZeroDivisionError("divisor must be non-zero")
    scaled = [Fraction(c) / divisor for c in acc.coeffs]
    for i, c in enumerate(scaled):
        if c.denominator != 1:
            raise IntegralityError(i, c, divisor)
    if isinstance(acc, TruncatedSeries):
        return TruncatedSeries(tuple(scaled), acc.cutoff)
    return ExactPolynomial(tuple(int(c) for c in scaled))


def format_polynomial(coeffs: Sequence[int | Fraction], var: str = "z") -> str:
    """Human form, ascending degree: 1 + z + 2*z^2."""
    terms = []
    for i, c in enumerate(coeffs):
        if c == 0:
            continue
        sign = "-" if c < 0 else "+"
        mag = -c if c < 0 else c
        if i == 0:
            body = str(mag)
        else:
            power = var if i == 1 else f"{var}^{i}"
            body = power if mag == 1 else f"{mag}*{power}"
        terms.append((sign, body))
    if not terms:
        return "0"
    first_sign, first_body = terms[0]
    out = ("-" if first_sign == "-" else "") + first_body
    for sign, body in terms[1:]:
        out += f" {sign} {body}"
    return out
