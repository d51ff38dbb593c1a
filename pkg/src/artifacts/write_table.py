# src/artifacts/write_table.py
from __future__ import annotations

import json
import os
import shutil
import uuid
from pathlib import Path
from typing import Callable

import pandas as pd

from src.artifacts.manifest import build_table_manifest
from src.enumeration.genfunc import GraphCountVector, simple_genfunc_det, simple_genfunc_harary
from src.pipeline.config import EnumerationConfig
from src.pipeline.formatting import counts_frame
from src.pipeline.paths import (
    COUNTS_FILENAME,
    MANIFEST_FILENAME,
    TOTALS_FILENAME,
    get_counts_path,
    get_manifest_path,
    get_totals_path,
)

TABLE_METHODS = ("det", "harary")


def _pipeline(method: str, config: EnumerationConfig | None) -> Callable[[int], GraphCountVector]:
    if method == "det":
        return lambda n: simple_genfunc_det(n, config=config)
    if method == "harary":
        return simple_genfunc_harary
    raise ValueError(f"method must be one of {list(TABLE_METHODS)}, got {method!r}")


def build_tables(
    n_max: int,
    *,
    method: str = "det",
    config: EnumerationConfig | None = None,
) -> tuple[pd.DataFrame, pd.DataFrame]:
    """
    The triangle a_{n,i} for 1 <= n <= n_max and the totals g_n(1).

    Returns:
        (counts with columns n,i,count; totals with columns n,total)

    Raises:
        ValueError: If n_max < 1 or method is unknown
    """
    if n_max < 1:
        raise ValueError(f"n_max must be >= 1, got {n_max}")
    compute = _pipeline(method, config)
    frames = []
    totals = []
    for n in range(1, n_max + 1):
        vector = compute(n)
        frames.append(counts_frame(n, vector.a))
        totals.append({"n": n, "total": vector.total})
    counts = pd.concat(frames, ignore_index=True)
    totals_df = pd.DataFrame(totals, columns=["n", "total"]).astype(object)
    return counts, totals_df


def promote_files(*, out_dir: str, files: list[tuple[str, str]]) -> None:
    """
    Atomically promote multiple files to out_dir.

    Uses a temporary directory and os.replace for atomicity. If any source file
    is missing or any copy fails, out_dir keeps its previous contents.

    Args:
        out_dir: Target directory
        files: List of (src_path, dst_filename) tuples

    Raises:
        FileNotFoundError: If any source file is missing (before any writes)
        OSError: If file operations fail
    """
    out_path = Path(out_dir)
    out_path.mkdir(parents=True, exist_ok=True)

    for src_path, _ in files:
        if not Path(src_path).exists():
            raise FileNotFoundError(f"Source file not found: {src_path}")

    temp_dir = out_path / f".tmp_{uuid.uuid4().hex[:8]}"
    temp_dir.mkdir(parents=True, exist_ok=True)

    try:
        temp_files = []
        for src_path, dst_filename in files:
            temp_dst = temp_dir / dst_filename
            shutil.copy2(Path(src_path), temp_dst)
            temp_files.append((temp_dst, out_path / dst_filename))

        for temp_file, final_file in temp_files:
            os.replace(temp_file, final_file)

        temp_dir.rmdir()

    except Exception:
        # cleanup must not hide the original error
        try:
            if temp_dir.exists():
                shutil.rmtree(temp_dir)
        except Exception:
            pass
        raise


def write_tables(
    *,
    out_dir: str | Path,
    n_max: int,
    method: str,
    sha: str,
    generated_at: str,
    config: EnumerationConfig | None = None,
) -> dict[str, Path]:
    """
    Compute and write graph_counts.csv, graph_totals.csv and manifest.json into out_dir.

    Everything is staged in a scratch directory first and promoted together.

    Returns:
        Mapping of file name to its final path
    """
    out_path = Path(out_dir)
    counts, totals = build_tables(n_max, method=method, config=config)

    staging = out_path.parent / f".staging_{uuid.uuid4().hex[:8]}"
    staging.mkdir(parents=True, exist_ok=True)
    try:
        counts_path = staging / COUNTS_FILENAME
        totals_path = staging / TOTALS_FILENAME
        counts.to_csv(counts_path, index=False, lineterminator="\n")
        totals.to_csv(totals_path, index=False, lineterminator="\n")

        manifest = build_table_manifest(
            generated_at=generated_at,
            sha=sha,
            method=method,
            n_max=n_max,
            tables={COUNTS_FILENAME: counts_path, TOTALS_FILENAME: totals_path},
        )
        # record final locations, not the staging ones
        for name, entry in manifest["files"].items():
            entry["path"] = str(out_path / name)
        manifest_path = staging / MANIFEST_FILENAME
        manifest_path.write_text(json.dumps(manifest, indent=2) + "\n", encoding="utf-8")

        promote_files(
            out_dir=str(out_path),
            files=[(str(staging / name), name) for name in (COUNTS_FILENAME, TOTALS_FILENAME, MANIFEST_FILENAME)],
        )
    finally:
        shutil.rmtree(staging, ignore_errors=True)

    out = str(out_path)
    return {
        COUNTS_FILENAME: Path(get_counts_path(out_dir=out)),
        TOTALS_FILENAME: Path(get_totals_path(out_dir=out)),
        MANIFEST_FILENAME: Path(get_manifest_path(out_dir=out)),
    }
