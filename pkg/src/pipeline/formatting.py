"""Rendering of count vectors and cycle indices for stdout."""
from __future__ import annotations

from collections.abc import Sequence

import pandas as pd

from src.groups.cycle_index import CycleIndexTerm, format_cycle_index
from src.pipeline.config import OUTPUT_FORMATS
from src.poly.exact import format_polynomial

CSV_COLUMNS = ["n", "i", "count"]


def coeff_list(coeffs: Sequence[int]) -> str:
    """Ascending degree, exact decimal, comma-separated, newline-terminated."""
    return ",".join(str(int(c)) for c in coeffs) + "\n"


def parse_coeff_list(text: str) -> list[int]:
    """Inverse of coeff_list."""
    stripped = text.strip()
    if not stripped:
        raise ValueError("empty coefficient list")
    return [int(tok) for tok in stripped.split(",")]


def counts_frame(n: int, coeffs: Sequence[int]) -> pd.DataFrame:
    """One row per coefficient; object dtype keeps integers beyond 64 bits exact."""
    return pd.DataFrame(
        {
            "n": pd.Series([n] * len(coeffs), dtype=object),
            "i": pd.Series(range(len(coeffs)), dtype=object),
            "count": pd.Series([int(c) for c in coeffs], dtype=object),
        },
        columns=CSV_COLUMNS,
    )


def counts_csv(n: int, coeffs: Sequence[int]) -> str:
    return counts_frame(n, coeffs).to_csv(index=False, lineterminator="\n")


def render_counts(n: int, coeffs: Sequence[int], fmt: str) -> str:
    """
    Raises:
        ValueError: If fmt is not a known output format
    """
    if fmt == "coeff-list":
        return coeff_list(coeffs)
    if fmt == "poly":
        return format_polynomial(coeffs) + "\n"
    if fmt == "csv":
        return counts_csv(n, coeffs)
    raise ValueError(f"format must be one of {list(OUTPUT_FORMATS)}, got {fmt!r}")


def render_cycle_index(n: int, terms: list[CycleIndexTerm], fmt: str) -> str:
    """
    poly: `1/6 * s_1^3 + ...`; coeff-list: one `coefficient;exponents` line per term;
    csv: columns n, coefficient, exponents (j_1..j_m space-separated).
    """
    if fmt == "poly":
        return format_cycle_index(terms) + "\n"
    rows = [(str(t.coefficient), " ".join(str(j) for j in t.pair_type.counts)) for t in terms]
    if fmt == "coeff-list":
        return "".join(f"{coefficient};{exponents}\n" for coefficient, exponents in rows)
    if fmt == "csv":
        df = pd.DataFrame(
            {
                "n": [n] * len(rows),
                "coefficient": [r[0] for r in rows],
                "exponents": [r[1] for r in rows],
            }
        )
        return df.to_csv(index=False, lineterminator="\n")
    raise ValueError(f"format must be one of {list(OUTPUT_FORMATS)}, got {fmt!r}")
