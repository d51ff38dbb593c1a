"""Cross-verification suites: every pipeline and identity checked against the others."""
from __future__ import annotations

import itertools
import logging
from collections.abc import Callable
from enum import Enum

from pydantic import BaseModel, Field

from src.enumeration.genfunc import (
    fixed_subset_count,
    multigraph_series,
    simple_genfunc_det,
    simple_genfunc_elementwise,
    simple_genfunc_harary,
    small_trace_formula,
    total_graph_count,
    trace_genfunc_of_element,
)
from src.errors import ConsistencyError, GuardError
from src.groups.cycle_index import pair_cycle_index, pair_cycle_type_closed_form
from src.groups.permutations import (
    Permutation,
    cycle_type,
    edge_indexing,
    enumerate_partition_classes,
    enumerate_permutations,
    induce_pair_perm,
    pair_cycle_type_of_class,
)
from src.invariants.algebra import Monomial, reynolds
from src.invariants.dimensions import component_dimensions, orbit_representatives, reproduce_n4_generators
from src.linalg.detmat import char_like_det, det_ratio_literal
from src.oracle.brute import brute_multigraph_counts, brute_simple_counts, burnside_subset_count
from src.pipeline.config import EnumerationConfig, get_config
from src.poly.exact import binomial_power, cycle_factor_product

logger = logging.getLogger("graphgf.verify")

SUITES = ("formulas", "lemmas", "invariants")


class Status(str, Enum):
    """Outcome of one identity check."""
    PASS = "PASS"
    FAIL = "FAIL"
    SKIP = "SKIP"


class CheckResult(BaseModel):
    """One checked identity."""
    suite: str
    name: str
    status: Status
    detail: str = ""


class VerifyReport(BaseModel):
    """All checks of one verify run."""
    n: int
    suites: list[str]
    checks: list[CheckResult] = Field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.status != Status.FAIL for c in self.checks)

    def counts(self) -> dict[str, int]:
        return {s.value: sum(1 for c in self.checks if c.status == s) for s in Status}

    def render(self) -> str:
        lines = [f"{c.status.value} [{c.suite}] {c.name}" + (f": {c.detail}" if c.detail else "") for c in self.checks]
        counts = self.counts()
        verdict = "PASS" if self.passed else "FAIL"
        lines.append(f"{verdict} n={self.n} passed={counts['PASS']} failed={counts['FAIL']} skipped={counts['SKIP']}")
        return "\n".join(lines) + "\n"


def expand_suites(suites: list[str]) -> list[str]:
    """
    Raises:
        ValueError: If a suite name is unknown
    """
    out: list[str] = []
    for name in suites:
        names = list(SUITES) if name == "all" else [name]
        for s in names:
            if s not in SUITES:
                raise ValueError(f"suite must be one of {list(SUITES) + ['all']}, got {s!r}")
            if s not in out:
                out.append(s)
    return out


def check_guards(n: int, suites: list[str], config: EnumerationConfig) -> None:
    """
    Refuse up front when a selected suite cannot run at this n.

    Raises:
        ValueError: If n < 1
        GuardError: If the per-element lemma checks are requested beyond their guard
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    guards = config.guards
    if "lemmas" in suites:
        if n > guards.lemma_element_max_n:
            raise GuardError(
                "guards.lemma_element_max_n",
                n,
                guards.lemma_element_max_n,
                "Skipping the per-element determinant suite; run formulas or invariants instead",
            )
        m = n * (n - 1) // 2
        if m > guards.detmat_max_m:
            raise GuardError("guards.detmat_max_m", m, guards.detmat_max_m)


class _Recorder:
    def __init__(self, report: VerifyReport, suite: str) -> None:
        self.report = report
        self.suite = suite

    def add(self, name: str, status: Status, detail: str = "") -> None:
        self.report.checks.append(CheckResult(suite=self.suite, name=name, status=status, detail=detail))

    def check(self, name: str, func: Callable[[], str | None]) -> None:
        """func returns None on success or a failure description."""
        try:
            problem = func()
        except ConsistencyError as e:
            problem = str(e)
        except GuardError as e:
            self.add(name, Status.SKIP, str(e))
            return
        self.add(name, Status.FAIL if problem else Status.PASS, problem or "")

    def skip(self, name: str, reason: str) -> None:
        self.add(name, Status.SKIP, reason)


def _diff(label: str, got, want) -> str | None:
    got, want = list(got), list(want)
    return None if got == want else f"{label}: {got} != {want}"


def _formulas(n: int, rec: _Recorder, config: EnumerationConfig) -> None:
    guards = config.guards
    det = simple_genfunc_det(n, config=config)

    rec.check("det == harary", lambda: _diff("harary", simple_genfunc_harary(n).a, det.a))
    if n <= guards.elementwise_max_n:
        rec.check("det == element", lambda: _diff("element", simple_genfunc_elementwise(n, config=config).a, det.a))
    else:
        rec.skip("det == element", f"n={n} above guards.elementwise_max_n={guards.elementwise_max_n}")
    if n <= guards.brute_simple_max_n:
        rec.check("det == brute", lambda: _diff("brute", brute_simple_counts(n, config=config).a, det.a))
    else:
        rec.skip("det == brute", f"n={n} above guards.brute_simple_max_n={guards.brute_simple_max_n}")

    rec.check(
        "g_n(1) == total graph count",
        lambda: None if det.total == total_graph_count(n) else f"{det.total} != {total_graph_count(n)}",
    )
    rec.check(
        "cycle index coefficients sum to 1",
        lambda: None if sum(t.coefficient for t in pair_cycle_index(n)) == 1 else "sum differs from 1",
    )

    idx = edge_indexing(n)

    def closed_form() -> str | None:
        for cls in enumerate_partition_classes(n):
            traced = pair_cycle_type_of_class(cls.cycle_type, idx)
            if pair_cycle_type_closed_form(cls.cycle_type) != traced:
                return f"class {cls.cycle_type}: closed form disagrees with traced {traced}"
        return None

    def small_traces() -> str | None:
        for cls in enumerate_partition_classes(n):
            alpha = pair_cycle_type_of_class(cls.cycle_type, idx)
            for i in range(min(4, idx.m) + 1):
                if small_trace_formula(alpha, i) != fixed_subset_count(alpha, i):
                    return f"class {cls.cycle_type}, i={i}"
        return None

    rec.check("pair cycle type closed form == traced", closed_form)
    rec.check("small trace formulas == fixed subset counts", small_traces)

    degree = min(idx.m, guards.brute_multi_max_degree)
    if n <= guards.brute_multi_max_n:
        rec.check(
            f"multigraph series == brute (D={degree})",
            lambda: _diff("brute", brute_multigraph_counts(n, degree, config=config).c, multigraph_series(n, degree, config=config).c),
        )
    else:
        rec.skip("multigraph series == brute", f"n={n} above guards.brute_multi_max_n={guards.brute_multi_max_n}")


def _lemmas(n: int, rec: _Recorder, config: EnumerationConfig) -> None:
    idx = edge_indexing(n)
    perms = [induce_pair_perm(sigma, idx) for sigma in enumerate_permutations(n, config=config)]

    def ratio() -> str | None:
        for p in perms:
            alpha = cycle_type(p)
            literal = det_ratio_literal(p, config=config)
            if literal != binomial_power(alpha.parts()):
                return f"pair permutation {p.images}: {literal}"
        return None

    def factored(power: int) -> Callable[[], str | None]:
        def run() -> str | None:
            for p in perms:
                if char_like_det(p, power, config=config) != cycle_factor_product(cycle_type(p), power):
                    return f"pair permutation {p.images}"
            return None

        return run

    def traces() -> str | None:
        for p in perms:
            alpha = cycle_type(p)
            poly = trace_genfunc_of_element(alpha)
            for i in range(idx.m + 1):
                if fixed_subset_count(alpha, i) != poly.coefficient(i):
                    return f"pair permutation {p.images}, i={i}"
        return None

    rec.check("det(1 - A z) == prod (1 - z^k)^j_k", factored(1))
    rec.check("det(1 - A z^2) == prod (1 - z^2k)^j_k", factored(2))
    rec.check("det ratio == prod (1 + z^k)^j_k", ratio)
    rec.check("fixed subset counts == trace polynomial coefficients", traces)
    rec.check(
        "averaged fixed subsets == det pipeline",
        lambda: _diff(
            "burnside",
            [burnside_subset_count(n, i) for i in range(idx.m + 1)],
            simple_genfunc_det(n, config=config).a,
        ),
    )


def _invariants(n: int, rec: _Recorder, config: EnumerationConfig) -> None:
    guards = config.guards
    det = simple_genfunc_det(n, config=config)
    m = det.m
    dims = component_dimensions(n)
    rec.check("component dimensions == g_n coefficients", lambda: _diff("dimensions", dims, det.a))
    rec.check("sum of dimensions == g_n(1)", lambda: None if sum(dims) == det.total else f"{sum(dims)} != {det.total}")

    if n <= guards.orbit_max_n:
        rec.check(
            "orbit representatives == dimensions",
            lambda: _diff("orbits", [len(orbit_representatives(n, i, config=config)) for i in range(m + 1)], dims),
        )
    else:
        rec.skip("orbit representatives == dimensions", f"n={n} above guards.orbit_max_n={guards.orbit_max_n}")

    if n <= guards.lemma_element_max_n:

        def fixed() -> str | None:
            # a transposition and an n-cycle generate S_n
            idx = edge_indexing(n)
            cycles = ([(1, 2)], [tuple(range(1, n + 1))]) if n >= 2 else ()
            gens = [induce_pair_perm(Permutation.from_cycles(n, c), idx) for c in cycles]
            for degree in range(1, 4):
                for slots in itertools.combinations_with_replacement(range(m), degree):
                    mono = Monomial(tuple(slots.count(u) for u in range(m)))
                    image = reynolds(mono, n, config=config)
                    if any(image.apply(g) != image for g in gens):
                        return f"R({mono}) is not group-fixed"
            return None

        rec.check("Reynolds images of degree <= 3 are group-fixed", fixed)
    else:
        rec.skip("Reynolds images of degree <= 3 are group-fixed", f"n={n} above guards.lemma_element_max_n={guards.lemma_element_max_n}")

    report = reproduce_n4_generators(config=config)
    for check in report.checks:
        rec.add(f"n=4 {check.name}", Status.PASS if check.passed else Status.FAIL, check.detail)


_RUNNERS = {"formulas": _formulas, "lemmas": _lemmas, "invariants": _invariants}


def run_verify(n: int, suites: list[str], *, config: EnumerationConfig | None = None) -> VerifyReport:
    """
    Run the selected suites at n.

    Raises:
        ValueError: If n < 1 or a suite is unknown
        GuardError: If a selected suite cannot run at this n
    """
    config = config or get_config()
    selected = expand_suites(suites)
    check_guards(n, selected, config)
    report = VerifyReport(n=n, suites=selected)
    for suite in selected:
        logger.debug("suite", extra={"n": n, "suite": suite})
        _RUNNERS[suite](n, _Recorder(report, suite), config)
    return report
