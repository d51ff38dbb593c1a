"""Deterministic path helpers for table generation runs."""
from __future__ import annotations

from pathlib import Path

COUNTS_FILENAME = "graph_counts.csv"
TOTALS_FILENAME = "graph_totals.csv"
MANIFEST_FILENAME = "manifest.json"


def get_counts_path(*, out_dir: str) -> str:
    """
    Args:
        out_dir: Output directory (e.g., "outputs/tables")

    Returns:
        Path of the per-edge-count table (e.g., "outputs/tables/graph_counts.csv")
    """
    return str(Path(out_dir) / COUNTS_FILENAME)


def get_totals_path(*, out_dir: str) -> str:
    """Path of the per-n totals table (e.g., "outputs/tables/graph_totals.csv")."""
    return str(Path(out_dir) / TOTALS_FILENAME)


def get_manifest_path(*, out_dir: str) -> str:
    """Path of the manifest JSON (e.g., "outputs/tables/manifest.json")."""
    return str(Path(out_dir) / MANIFEST_FILENAME)
