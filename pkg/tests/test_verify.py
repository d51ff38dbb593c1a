"""Tests for the cross-verification suites."""
from __future__ import annotations

import json
from unittest.mock import patch

import pytest

from src.enumeration.genfunc import GraphCountVector
from src.errors import ConsistencyError, GuardError
from src.pipeline.config import EnumerationConfig, GuardConfig
from src.pipeline.verify import SUITES, Status, VerifyReport, expand_suites, run_verify


def test_expand_suites():
    """Test 'all', de-duplication and order."""
    assert expand_suites(["all"]) == list(SUITES)
    assert expand_suites(["lemmas", "formulas", "lemmas"]) == ["lemmas", "formulas"]
    with pytest.raises(ValueError, match="suite must be one of"):
        expand_suites(["bogus"])


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_all_suites_pass_small_n(n: int):
    """Test that every identity holds and nothing is skipped at small n."""
    report = run_verify(n, ["all"])
    assert report.passed
    assert report.counts()["FAIL"] == 0
    assert report.counts()["SKIP"] == 0
    assert {c.suite for c in report.checks} == set(SUITES)


def test_formulas_skip_beyond_guards():
    """Test that optional cross-checks are skipped, not failed, above their guards."""
    report = run_verify(7, ["formulas"])
    assert report.passed
    skipped = {c.name for c in report.checks if c.status == Status.SKIP}
    assert "det == brute" in skipped
    assert "multigraph series == brute" in skipped


def test_lemmas_guard_refuses_up_front():
    """Test that per-element determinant checks above the guard raise with a hint."""
    with pytest.raises(GuardError, match="guards.lemma_element_max_n.*run formulas or invariants"):
        run_verify(6, ["lemmas"])


def test_lemmas_matrix_guard():
    """Test the matrix-size guard of the lemma suite."""
    config = EnumerationConfig(guards=GuardConfig(detmat_max_m=5, cofactor_max_m=5))
    with pytest.raises(GuardError, match="guards.detmat_max_m"):
        run_verify(4, ["lemmas"], config=config)


def test_invalid_n():
    """Test n >= 1."""
    with pytest.raises(ValueError, match="n must be >= 1"):
        run_verify(0, ["formulas"])


def test_disagreement_is_reported_as_failure():
    """Test that a wrong pipeline result turns into a FAIL line."""
    wrong = GraphCountVector(3, (1, 2, 2, 1))
    with patch("src.pipeline.verify.simple_genfunc_harary", return_value=wrong):
        report = run_verify(3, ["formulas"])
    assert not report.passed
    failed = [c for c in report.checks if c.status == Status.FAIL]
    assert [c.name for c in failed] == ["det == harary"]
    assert "harary" in failed[0].detail


def test_consistency_error_is_reported_as_failure():
    """Test that a raised ConsistencyError inside a check becomes FAIL with its message."""
    with patch("src.pipeline.verify.total_graph_count", side_effect=ConsistencyError("not an integer")):
        report = run_verify(3, ["formulas"])
    failed = [c for c in report.checks if c.status == Status.FAIL]
    assert failed[0].detail == "not an integer"


def test_render_summary_line():
    """Test the text report."""
    text = run_verify(2, ["formulas"]).render()
    lines = text.splitlines()
    assert lines[0].startswith("PASS [formulas] ")
    assert lines[-1].startswith("PASS n=2 passed=")
    assert lines[-1].endswith("failed=0 skipped=0")


def test_report_json_round_trip():
    """Test that the pydantic report serializes statuses by value."""
    report = run_verify(2, ["invariants"])
    data = json.loads(report.model_dump_json())
    assert data["n"] == 2
    assert data["suites"] == ["invariants"]
    assert all(c["status"] == "PASS" for c in data["checks"])
    assert VerifyReport.model_validate(data).passed


@pytest.mark.parametrize("n", [4, 5, 6])
def test_sequence_checks_pass_with_mixed_container_types(n: int):
    """Test that list-valued results compare equal to the tuple-valued det pipeline."""
    report = run_verify(n, ["invariants"])
    by_name = {c.name: c for c in report.checks}
    assert by_name["component dimensions == g_n coefficients"].status == Status.PASS
    assert by_name["orbit representatives == dimensions"].status == Status.PASS
    assert report.passed


def test_averaged_fixed_subsets_check_passes():
    """Test the Burnside subset average against the det pipeline at n = 4."""
    report = run_verify(4, ["lemmas"])
    by_name = {c.name: c for c in report.checks}
    assert by_name["averaged fixed subsets == det pipeline"].status == Status.PASS


def test_reynolds_check_covers_degree_three():
    """Test the group-fixed check over every monomial of degree <= 3."""
    report = run_verify(4, ["invariants"])
    names = [c.name for c in report.checks if c.status == Status.PASS]
    assert "Reynolds images of degree <= 3 are group-fixed" in names


def test_inexact_elimination_is_reported_as_failure():
    """Test that a Bareiss remainder becomes FAIL lines instead of escaping."""
    with patch("src.linalg.detmat.exact_divide", side_effect=ArithmeticError("remainder")):
        report = run_verify(3, ["lemmas"])
    failed = {c.name: c.detail for c in report.checks if c.status == Status.FAIL}
    assert "det(1 - A z) == prod (1 - z^k)^j_k" in failed
    assert "not exact" in failed["det(1 - A z) == prod (1 - z^k)^j_k"]
    passed = {c.name for c in report.checks if c.status == Status.PASS}
    assert "averaged fixed subsets == det pipeline" in passed
