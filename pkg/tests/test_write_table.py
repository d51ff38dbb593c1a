"""
Tests for src.artifacts.write_table and the generate_table script.
"""
import json
from pathlib import Path
from unittest.mock import patch

import pandas as pd
import pytest

from scripts.generate_table import main as generate_main
from src.artifacts.manifest import sha256_file
from src.artifacts.write_table import build_tables, promote_files, write_tables
from src.errors import ConsistencyError


def test_build_tables_triangle():
    """Test the rows of the triangle and the totals column."""
    counts, totals = build_tables(4)

    assert list(counts.columns) == ["n", "i", "count"]
    assert len(counts) == 1 + 2 + 4 + 7
    assert counts[counts["n"] == 4]["count"].tolist() == [1, 1, 2, 3, 2, 1, 1]
    assert totals["total"].tolist() == [1, 2, 4, 11]


def test_build_tables_methods_agree():
    """Test that both class-summed pipelines give the same table."""
    det_counts, _ = build_tables(6, method="det")
    harary_counts, _ = build_tables(6, method="harary")
    pd.testing.assert_frame_equal(det_counts, harary_counts)


def test_build_tables_rejects_bad_input():
    """Test n_max and method validation."""
    with pytest.raises(ValueError, match="n_max must be >= 1"):
        build_tables(0)
    with pytest.raises(ValueError, match="method must be one of"):
        build_tables(3, method="brute")


def test_promote_files_atomic(tmp_path: Path):
    """Test that promote_files moves every file and leaves no temp directory."""
    out_dir = tmp_path / "tables"
    src_dir = tmp_path / "src"
    src_dir.mkdir()
    src_csv = src_dir / "graph_counts.csv"
    src_json = src_dir / "manifest.json"
    src_csv.write_text("n,i,count\n1,0,1\n")
    src_json.write_text(json.dumps({"test": "data"}), encoding="utf-8")

    promote_files(
        out_dir=str(out_dir),
        files=[(str(src_csv), "graph_counts.csv"), (str(src_json), "manifest.json")],
    )

    assert (out_dir / "graph_counts.csv").read_text() == "n,i,count\n1,0,1\n"
    assert json.loads((out_dir / "manifest.json").read_text()) == {"test": "data"}
    assert not [d for d in out_dir.iterdir() if d.name.startswith(".tmp_")]


def test_promote_files_missing_source_raises(tmp_path: Path):
    """Test that a missing source raises before anything is written."""
    out_dir = tmp_path / "tables"
    src_csv = tmp_path / "graph_counts.csv"
    src_csv.write_text("n,i,count\n")

    with pytest.raises(FileNotFoundError, match="Source file not found"):
        promote_files(
            out_dir=str(out_dir),
            files=[(str(src_csv), "graph_counts.csv"), (str(tmp_path / "gone.csv"), "gone.csv")],
        )

    assert not (out_dir / "graph_counts.csv").exists()


def test_write_tables_outputs_and_manifest(tmp_path: Path):
    """Test the three promoted files and that the manifest points at final locations."""
    out_dir = tmp_path / "tables"
    paths = write_tables(
        out_dir=out_dir,
        n_max=5,
        method="det",
        sha="abc123",
        generated_at="2026-01-01T00:00:00Z",
    )

    assert set(paths) == {"graph_counts.csv", "graph_totals.csv", "manifest.json"}
    assert all(p.exists() for p in paths.values())

    totals = pd.read_csv(paths["graph_totals.csv"])
    assert totals["total"].tolist() == [1, 2, 4, 11, 34]

    manifest = json.loads(paths["manifest.json"].read_text())
    entry = manifest["files"]["graph_counts.csv"]
    assert entry["path"] == str(out_dir / "graph_counts.csv")
    assert entry["sha256"] == sha256_file(paths["graph_counts.csv"])
    assert entry["min_n"] == 1 and entry["max_n"] == 5
    assert manifest["sha"] == "abc123"

    # staging is removed after promotion
    assert [p.name for p in tmp_path.iterdir()] == ["tables"]


def test_write_tables_is_deterministic(tmp_path: Path):
    """Test that rewriting the same tables gives identical bytes."""
    first = write_tables(out_dir=tmp_path / "a", n_max=4, method="det", sha="s", generated_at="t")
    second = write_tables(out_dir=tmp_path / "b", n_max=4, method="harary", sha="s", generated_at="t")
    assert sha256_file(first["graph_counts.csv"]) == sha256_file(second["graph_counts.csv"])


def test_generate_table_script(tmp_path: Path, capsys):
    """Test the script end to end with an explicit SHA."""
    out_dir = tmp_path / "tables"
    assert generate_main(["--n-max", "3", "--out-dir", str(out_dir), "--sha", "deadbeef"]) == 0
    out = capsys.readouterr().out
    assert out.count("[OK] wrote:") == 3
    assert json.loads((out_dir / "manifest.json").read_text())["sha"] == "deadbeef"


def test_generate_table_script_falls_back_to_local_sha(tmp_path: Path):
    """Test the SHA fallback outside a git checkout."""
    out_dir = tmp_path / "tables"
    with patch("scripts.generate_table.get_git_sha", side_effect=RuntimeError("no git")):
        assert generate_main(["--n-max", "2", "--out-dir", str(out_dir)]) == 0
    assert json.loads((out_dir / "manifest.json").read_text())["sha"] == "local"


def test_generate_table_script_errors(tmp_path: Path, capsys):
    """Test exit codes for bad input, bad config and consistency failures."""
    assert generate_main(["--n-max", "0", "--sha", "x"]) == 2
    assert generate_main(["--n-max", "2", "--config", str(tmp_path / "none.json"), "--sha", "x"]) == 2
    with patch("scripts.generate_table.write_tables", side_effect=ConsistencyError("bad")):
        assert generate_main(["--n-max", "2", "--out-dir", str(tmp_path / "t"), "--sha", "x"]) == 1
    assert "internal consistency failure" in capsys.readouterr().err
