"""
Permutation matrices and determinants of matrices over Z[z].

Verification layer for the factored determinant identities; never on the hot path.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from src.errors import ConsistencyError, GuardError
from src.groups.permutations import PairPermutation
from src.pipeline.config import EnumerationConfig, get_config
from src.poly.exact import ExactPolynomial, exact_divide, poly_divmod, poly_mul

DET_METHODS = ("bareiss", "cofactor")


@dataclass(frozen=True)
class PermMatrix:
    """0/1 matrix with M[p(s)][s] = 1, so M e_s = e_p(s)."""

    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        """Validate one 1 per row and per column."""
        size = len(self.rows)
        for r in self.rows:
            if len(r) != size or any(v not in (0, 1) for v in r) or sum(r) != 1:
                raise ValueError("each row must hold exactly one 1 and be square")
        for col in range(size):
            if sum(r[col] for r in self.rows) != 1:
                raise ValueError(f"column {col} must hold exactly one 1")

    @property
    def size(self) -> int:
        return len(self.rows)


@dataclass(frozen=True)
class PolyMatrix:
    """Square matrix of ExactPolynomial entries."""

    entries: tuple[tuple[ExactPolynomial, ...], ...]

    def __post_init__(self) -> None:
        size = len(self.entries)
        if any(len(r) != size for r in self.entries):
            raise ValueError("PolyMatrix must be square")

    @property
    def size(self) -> int:
        return len(self.entries)


def perm_to_matrix(p: PairPermutation) -> PermMatrix:
    m = p.m
    rows = [[0] * m for _ in range(m)]
    for s in range(m):
        rows[p(s)][s] = 1
    return PermMatrix(tuple(tuple(r) for r in rows))


def identity_minus_scaled(matrix: PermMatrix, power: int) -> PolyMatrix:
    """1_m - A z^power."""
    one = ExactPolynomial.one()
    term = ExactPolynomial.monomial(power)
    zero = ExactPolynomial(())
    entries = []
    for r, row in enumerate(matrix.rows):
        out = []
        for c, v in enumerate(row):
            entry = one if r == c else zero
            if v:
                entry = entry - term
            out.append(entry)
        entries.append(tuple(out))
    return PolyMatrix(tuple(entries))


def bareiss_determinant(matrix: PolyMatrix) -> ExactPolynomial:
    """
    Fraction-free elimination over Z[z]; every division is exact.

    Raises:
        ConsistencyError: If an elimination step leaves a remainder
    """
    size = matrix.size
    if size == 0:
        return ExactPolynomial.one()
    a = [list(r) for r in matrix.entries]
    sign = 1
    prev = ExactPolynomial.one()
    for k in range(size - 1):
        if a[k][k].is_zero():
            pivot_row = next((r for r in range(k + 1, size) if not a[r][k].is_zero()), None)
            if pivot_row is None:
                return ExactPolynomial(())
            a[k], a[pivot_row] = a[pivot_row], a[k]
            sign = -sign
        pivot = a[k][k]
        for i in range(k + 1, size):
            for j in range(k + 1, size):
                numerator = poly_mul(a[i][j], pivot) - poly_mul(a[i][k], a[k][j])
                try:
                    a[i][j] = exact_divide(numerator, prev)
                except ArithmeticError as e:
                    raise ConsistencyError(f"elimination step {k} is not exact: {e}") from e
            a[i][k] = ExactPolynomial(())
        prev = pivot
    det = a[size - 1][size - 1]
    return det if sign == 1 else -det


def cofactor_determinant(matrix: PolyMatrix) -> ExactPolynomial:
    """Laplace expansion along rows, memoized on the set of remaining columns."""
    size = matrix.size
    entries = matrix.entries

    @lru_cache(maxsize=None)
    def minor(row: int, cols: int) -> ExactPolynomial:
        if row == size:
            return ExactPolynomial.one()
        acc = ExactPolynomial(())
        sign = 1
        for col in range(size):
            if not cols & (1 << col):
                continue
            entry = entries[row][col]
            if not entry.is_zero():
                term = poly_mul(entry, minor(row + 1, cols & ~(1 << col)))
                acc = acc + term if sign == 1 else acc - term
            sign = -sign
        return acc

    return minor(0, (1 << size) - 1)


def char_like_det(
    p: PairPermutation,
    power: int,
    *,
    method: str = "bareiss",
    config: EnumerationConfig | None = None,
) -> ExactPolynomial:
    """
    det(1_m - A_p z^power) by literal expansion.

    Raises:
        ValueError: If power is not 1 or 2, or method is unknown
        GuardError: If m exceeds the guard of the chosen method
    """
    if power not in (1, 2):
        raise ValueError(f"power must be 1 or 2, got {power}")
    if method not in DET_METHODS:
        raise ValueError(f"method must be one of {list(DET_METHODS)}, got {method!r}")
    guards = (config or get_config()).guards
    if method == "bareiss" and p.m > guards.detmat_max_m:
        raise GuardError("guards.detmat_max_m", p.m, guards.detmat_max_m)
    if method == "cofactor" and p.m > guards.cofactor_max_m:
        raise GuardError("guards.cofactor_max_m", p.m, guards.cofactor_max_m)
    matrix = identity_minus_scaled(perm_to_matrix(p), power)
    return bareiss_determinant(matrix) if method == "bareiss" else cofactor_determinant(matrix)


def det_ratio_literal(
    p: PairPermutation,
    *,
    method: str = "bareiss",
    config: EnumerationConfig | None = None,
) -> ExactPolynomial:
    """
    det(1 - A z^2) / det(1 - A z) by polynomial long division.

    Raises:
        ConsistencyError: If the division leaves a remainder
    """
    numerator = char_like_det(p, 2, method=method, config=config)
    denominator = char_like_det(p, 1, method=method, config=config)
    try:
        quotient, remainder = poly_divmod(numerator, denominator)
    except ArithmeticError as e:
        raise ConsistencyError(f"determinant ratio is not a polynomial: {e}") from e
    if not remainder.is_zero():
        raise ConsistencyError(f"determinant ratio leaves remainder {remainder}")
    return quotient
