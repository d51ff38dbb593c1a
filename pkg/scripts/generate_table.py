"""
Generate the simple-graph count triangle a_{n,i} with totals and a manifest.

A deterministic local entrypoint; the same tables can be regenerated anywhere from the
commit SHA stamped in the manifest.
"""
from __future__ import annotations

import argparse
import sys
from datetime import datetime, timezone

from src.artifacts.manifest import get_git_sha
from src.artifacts.write_table import TABLE_METHODS, write_tables
from src.errors import ConsistencyError
from src.pipeline.config import resolve_config


def parse_args(argv: list[str] | None = None) -> argparse.Namespace:
    p = argparse.ArgumentParser(description="Generate graph count tables for 1 <= n <= n-max.")
    p.add_argument("--n-max", type=int, required=True, help="Largest number of vertices.")
    p.add_argument(
        "--out-dir",
        type=str,
        default="outputs/tables",
        help="Output directory for graph_counts.csv, graph_totals.csv and manifest.json.",
    )
    p.add_argument("--method", choices=TABLE_METHODS, default="det", help="Class-summed pipeline to use.")
    p.add_argument("--config", type=str, default=None, help="Path to enumeration config JSON.")
    p.add_argument(
        "--sha",
        type=str,
        default=None,
        help="Commit SHA to embed in the manifest (default: git HEAD, or 'local' outside a checkout).",
    )
    return p.parse_args(argv)


def main(argv: list[str] | None = None) -> int:
    args = parse_args(argv)

    if args.n_max < 1:
        print(f"[ERROR] --n-max must be >= 1, got {args.n_max}", file=sys.stderr)
        return 2

    try:
        config = resolve_config(args.config)
    except (FileNotFoundError, ValueError) as e:
        print(f"[ERROR] configuration: {e}", file=sys.stderr)
        return 2

    sha = args.sha
    if sha is None:
        try:
            sha = get_git_sha()
        except RuntimeError:
            sha = "local"

    generated_at = datetime.now(timezone.utc).isoformat(timespec="seconds").replace("+00:00", "Z")
    try:
        paths = write_tables(
            out_dir=args.out_dir,
            n_max=args.n_max,
            method=args.method,
            sha=sha,
            generated_at=generated_at,
            config=config,
        )
    except ConsistencyError as e:
        print(f"[ERROR] internal consistency failure: {e}", file=sys.stderr)
        return 1

    for path in paths.values():
        print(f"[OK] wrote: {path}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
