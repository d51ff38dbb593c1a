"""Deterministic manifest builder for generated count tables."""
from __future__ import annotations

import hashlib
import subprocess
import sys
from pathlib import Path
from typing import Any

import pandas as pd


def sha256_file(path: str | Path) -> str:
    """
    Compute SHA256 hash of a file.

    Args:
        path: Path to file

    Returns:
        Hexadecimal SHA256 hash (64 characters)

    Raises:
        FileNotFoundError: If file does not exist
    """
    path_obj = Path(path)
    if not path_obj.exists():
        raise FileNotFoundError(f"File not found: {path_obj}")

    sha256_hash = hashlib.sha256()
    with open(path_obj, "rb") as f:
        for chunk in iter(lambda: f.read(4096), b""):
            sha256_hash.update(chunk)

    return sha256_hash.hexdigest()


def file_bytes(path: str | Path) -> int:
    """
    Raises:
        FileNotFoundError: If file does not exist
    """
    path_obj = Path(path)
    if not path_obj.exists():
        raise FileNotFoundError(f"File not found: {path_obj}")

    return path_obj.stat().st_size


def get_git_sha() -> str:
    """
    Get current git commit SHA.

    Raises:
        RuntimeError: If git command fails or returns empty
    """
    try:
        result = subprocess.run(
            ["git", "rev-parse", "HEAD"],
            capture_output=True,
            text=True,
            check=True,
        )
        sha = result.stdout.strip()
        if not sha:
            raise RuntimeError("git rev-parse HEAD returned empty string")
        return sha
    except subprocess.CalledProcessError as e:
        raise RuntimeError(f"git rev-parse HEAD failed: {e.stderr}") from e
    except FileNotFoundError:
        raise RuntimeError("git command not found. Is git installed?")


def read_csv_rows_and_n_range(path: str | Path) -> dict[str, Any]:
    """
    Row count and vertex-count range of a table CSV.

    Raises:
        FileNotFoundError: If file does not exist
        ValueError: If the n column is missing
    """
    path_obj = Path(path)
    if not path_obj.exists():
        raise FileNotFoundError(f"File not found: {path_obj}")

    df = pd.read_csv(path_obj, dtype=str)
    if "n" not in df.columns:
        raise ValueError(f"Column 'n' not found in {path_obj}")

    if len(df) == 0:
        return {"rows": 0, "min_n": None, "max_n": None}

    ns = df["n"].astype(int)
    return {"rows": len(df), "min_n": int(ns.min()), "max_n": int(ns.max())}


def build_table_manifest(
    *,
    generated_at: str,
    sha: str,
    method: str,
    n_max: int,
    tables: dict[str, str | Path],
) -> dict[str, Any]:
    """
    Build a manifest with per-file hashes, sizes and row counts.

    Args:
        generated_at: UTC ISO timestamp of the run
        sha: Commit SHA stamped on the artifacts
        method: Pipeline that produced the counts
        n_max: Largest vertex count in the tables
        tables: Mapping of file name to path, recorded in sorted order

    Raises:
        FileNotFoundError: If any table is missing
    """
    files = {}
    for name in sorted(tables):
        path = tables[name]
        info = read_csv_rows_and_n_range(path)
        files[name] = {
            "path": str(path),
            "sha256": sha256_file(path),
            "bytes": file_bytes(path),
            "rows": info["rows"],
            "min_n": info["min_n"],
            "max_n": info["max_n"],
        }

    return {
        "generated_at": generated_at,
        "sha": sha,
        "python_version": sys.version.split()[0],
        "method": method,
        "n_max": n_max,
        "files": files,
    }
