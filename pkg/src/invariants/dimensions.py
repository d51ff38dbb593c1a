"""
Graded dimensions of the invariant ring of simple graphs, orbit representatives, and the
four-vertex generator checks.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from src.enumeration.genfunc import trace_genfunc_of_element
from src.errors import ConsistencyError, GuardError
from src.groups.permutations import edge_indexing, enumerate_partition_classes, pair_cycle_type_of_class
from src.invariants.algebra import EdgeMask, Monomial, SymPoly, reynolds
from src.oracle.canonical import mask_permuters, pair_group_elements
from src.pipeline.config import EnumerationConfig, get_config
from src.poly.exact import ExactPolynomial


@lru_cache(maxsize=32)
def _weighted_trace_polynomial(n: int) -> ExactPolynomial:
    """sum over classes of |class| * prod (1 + z^k)^(j_k); built once per n."""
    idx = edge_indexing(n)
    acc = ExactPolynomial(())
    for cls in enumerate_partition_classes(n):
        acc = acc + cls.class_size * trace_genfunc_of_element(pair_cycle_type_of_class(cls.cycle_type, idx))
    return acc


def component_dimension(n: int, i: int) -> int:
    """
    Dimension of the degree-i component: orbits of i-edge subsets, as the class-weighted
    average of the z^i coefficient of prod (1 + z^k)^(j_k).

    Args:
        n: Number of vertices (>= 1)
        i: Degree, 0 <= i <= C(n, 2)

    Returns:
        The number of orbits of i-edge subsets under S_n

    Raises:
        ValueError: If n < 1 or i is outside 0..C(n, 2)
        ConsistencyError: If the average is not an integer
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    m = edge_indexing(n).m
    if not 0 <= i <= m:
        raise ValueError(f"edge count {i} outside 0..{m}")
    dim, rem = divmod(_weighted_trace_polynomial(n).coefficient(i), math.factorial(n))
    if rem:
        raise ConsistencyError(f"dimension at n={n}, i={i} is not an integer")
    return dim


def component_dimensions(n: int) -> list[int]:
    """Dimensions of every component, degrees 0..C(n, 2)."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    return [component_dimension(n, i) for i in range(edge_indexing(n).m + 1)]


def orbit_representatives(n: int, i: int, *, config: EnumerationConfig | None = None) -> list[EdgeMask]:
    """
    The minimum mask of every orbit of i-edge graphs, in increasing order.

    Raises:
        ValueError: If i is outside 0..C(n, 2)
        GuardError: If n exceeds guards.orbit_max_n
    """
    config = config or get_config()
    limit = config.guards.orbit_max_n
    if n > limit:
        raise GuardError("guards.orbit_max_n", n, limit)
    idx = edge_indexing(n)
    if not 0 <= i <= idx.m:
        raise ValueError(f"edge count {i} outside 0..{idx.m}")
    permuters = mask_permuters(n, config=config)
    seen: set[int] = set()
    reps = []
    for slots in itertools.combinations(range(idx.m), i):
        mask = EdgeMask.from_slots(n, slots).bits
        if mask in seen:
            continue
        orbit = {permute(mask) for permute in permuters}
        seen |= orbit
        reps.append(min(orbit))
    return [EdgeMask(n, bits) for bits in sorted(reps)]


N4_VARIABLES = 6

# printed expansions for n = 4: (name, monomial, coefficient, listed terms)
N4_PRINTED_EXPANSIONS = (
    ("R(x_1)", "x_1", Fraction(1, 6), ("x_1", "x_2", "x_3", "x_4", "x_5", "x_6")),
    ("R(x_1*x_6)", "x_1*x_6", Fraction(1, 3), ("x_1*x_6", "x_2*x_5", "x_3*x_4")),
    (
        "R(x_1*x_2*x_3)",
        "x_1*x_2*x_3",
        Fraction(1, 4),
        ("x_1*x_3*x_2", "x_1*x_5*x_4", "x_2*x_6*x_4", "x_3*x_6*x_5"),
    ),
    (
        "R(x_1^2*x_2)",
        "x_1^2*x_2",
        Fraction(1, 24),
        (
            "x_1^2*x_2", "x_1^2*x_3", "x_2^2*x_1", "x_2^2*x_3", "x_3^2*x_1", "x_3^2*x_2",
            "x_1^2*x_4", "x_1^2*x_5", "x_4^2*x_1", "x_4^2*x_5", "x_5^2*x_1", "x_5^2*x_4",
            "x_2^2*x_4", "x_2^2*x_6", "x_4^2*x_2", "x_4^2*x_6", "x_6^2*x_2", "x_6^2*x_4",
            "x_3^2*x_5", "x_3^2*x_6", "x_5^2*x_3", "x_5^2*x_6", "x_6^2*x_3", "x_6^2*x_5",
        ),
    ),
)

# weighted-graph generators for n = 4: (monomial, orbit size, coefficient per term)
N4_WEIGHTED_GENERATORS = (
    ("x_1", 6, Fraction(1, 6)),
    ("x_1^2", 6, Fraction(1, 6)),
    ("x_1*x_6", 3, Fraction(1, 3)),
    ("x_1^3", 6, Fraction(1, 6)),
    ("x_1^2*x_2", 24, Fraction(1, 24)),
    ("x_1*x_2*x_3", 4, Fraction(1, 4)),
    ("x_1^4", 6, Fraction(1, 6)),
    ("x_1^5", 6, Fraction(1, 6)),
    ("x_1^3*x_2", 24, Fraction(1, 24)),
)

N4_SIMPLE_GENERATORS = ("x_1", "x_1*x_6", "x_1*x_2", "x_1*x_2*x_3")


@dataclass(frozen=True)
class GeneratorCheck:
    name: str
    passed: bool
    detail: str = ""


@dataclass
class GeneratorReport:
    checks: list[GeneratorCheck] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def add(self, name: str, passed: bool, detail: str = "") -> None:
        self.checks.append(GeneratorCheck(name, passed, detail))


def _mono(text: str) -> Monomial:
    return Monomial.parse(N4_VARIABLES, text)


def _compare(report: GeneratorReport, name: str, actual: SymPoly, expected: SymPoly) -> None:
    diff = actual.first_difference(expected)
    if diff is None:
        report.add(name, True)
    else:
        mono, got, want = diff
        report.add(name, False, f"term {mono}: expected {want}, got {got}")


def reproduce_n4_generators(*, config: EnumerationConfig | None = None) -> GeneratorReport:
    """
    Check the four-vertex invariants against their printed expansions.

    Literal term-by-term matches for R(x_1), R(x_1*x_6), R(x_1*x_2*x_3) and R(x_1^2*x_2);
    gamma(R(x_1^p)) = R(x_1) for p = 2..5 and gamma(R(x_1^2*x_2)) = R(x_1*x_2); and for all
    nine weighted generators the orbit structure (term count, uniform coefficient, group
    invariance) plus gamma landing on a simple-graph generator.
    """
    report = GeneratorReport()
    group = pair_group_elements(4, config=config)

    for name, mono, coefficient, terms in N4_PRINTED_EXPANSIONS:
        expected = SymPoly.uniform((_mono(t) for t in terms), coefficient)
        _compare(report, f"{name} expansion", reynolds(_mono(mono), 4, config=config), expected)

    r_x1 = reynolds(_mono("x_1"), 4, config=config)
    for p in range(2, 6):
        _compare(report, f"gamma(R(x_1^{p})) = R(x_1)", reynolds(_mono(f"x_1^{p}"), 4, config=config).gamma(), r_x1)
    _compare(
        report,
        "gamma(R(x_1^2*x_2)) = R(x_1*x_2)",
        reynolds(_mono("x_1^2*x_2"), 4, config=config).gamma(),
        reynolds(_mono("x_1*x_2"), 4, config=config),
    )

    simple = [reynolds(_mono(t), 4, config=config) for t in N4_SIMPLE_GENERATORS]
    for text, orbit_size, coefficient in N4_WEIGHTED_GENERATORS:
        image = reynolds(_mono(text), 4, config=config)
        name = f"R({text}) orbit structure"
        if len(image) != orbit_size:
            report.add(name, False, f"{len(image)} terms, expected {orbit_size}")
        elif any(c != coefficient for c in image.terms.values()):
            report.add(name, False, f"coefficients differ from {coefficient}")
        elif any(image.apply(g) != image for g in group):
            report.add(name, False, "not fixed by the pair group")
        else:
            report.add(name, True)
        reduced = image.gamma()
        lands = any(reduced == s for s in simple)
        report.add(f"gamma(R({text})) is a simple-graph generator", lands, "" if lands else f"gamma image {reduced}")
    return report
