"""Tests for the averaging operator, graded dimensions and the four-vertex generators."""
from __future__ import annotations

import itertools
import random
from fractions import Fraction

import pytest

from src.enumeration.genfunc import simple_genfunc_det
from src.errors import GuardError
from src.groups.permutations import PairPermutation
from src.invariants.algebra import EdgeMask, Monomial, SymPoly, gamma_reduce, pair_group, reynolds
from src.invariants.dimensions import (
    N4_WEIGHTED_GENERATORS,
    component_dimension,
    component_dimensions,
    orbit_representatives,
    reproduce_n4_generators,
)
from src.pipeline.config import EnumerationConfig, GuardConfig


def mono(text: str, m: int = 6) -> Monomial:
    return Monomial.parse(m, text)


def test_monomial_parse_and_str():
    """Test reading and printing monomials with repeated factors."""
    assert mono("x_1^2*x_2").exponents == (2, 1, 0, 0, 0, 0)
    assert mono("x_2*x_1*x_1") == mono("x_1^2*x_2")
    assert str(mono("x_6^3*x_1")) == "x_1*x_6^3"
    assert str(Monomial.constant(3)) == "1"
    assert mono("1").degree == 0


def test_monomial_parse_errors():
    """Test bad factors and out-of-range variables."""
    with pytest.raises(ValueError, match="cannot read"):
        mono("y_1")
    with pytest.raises(ValueError, match="outside x_1..x_6"):
        mono("x_7")
    with pytest.raises(ValueError):
        Monomial((1, -1))


def test_gamma_reduce():
    """Test x_i^p -> x_i and that the constant is untouched."""
    assert gamma_reduce(mono("x_1^3*x_4")) == mono("x_1*x_4")
    assert gamma_reduce(mono("x_2")) == mono("x_2")
    assert gamma_reduce(Monomial.constant(6)) == Monomial.constant(6)


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_gamma_commutes_with_group_action(n: int):
    """Test gamma(g f) = g gamma(f) for every group element, exponents up to 3."""
    rng = random.Random(n)
    m = n * (n - 1) // 2
    group = pair_group(n)
    for _ in range(20):
        f = Monomial(tuple(rng.randint(0, 3) for _ in range(m)))
        for g in group:
            assert gamma_reduce(f.apply(g)) == gamma_reduce(f).apply(g)


def test_gamma_merges_terms():
    """Test that distinct monomials collapsing to one add their coefficients."""
    poly = SymPoly.from_monomial(mono("x_1^2"), Fraction(1, 2)) + SymPoly.from_monomial(mono("x_1^3"), Fraction(1, 3))
    assert poly.gamma() == SymPoly.from_monomial(mono("x_1"), Fraction(5, 6))


def test_sympoly_drops_zero_terms():
    """Test cancellation."""
    a = SymPoly.from_monomial(mono("x_1"))
    assert len(a + a.scale(-1)) == 0
    assert str(a + a.scale(-1)) == "0"


def test_edge_mask_apply():
    """Test that the edge in slot s moves to slot p(s)."""
    p = PairPermutation((0, 2, 1), 3)
    assert EdgeMask(3, 0b010).apply(p) == EdgeMask(3, 0b100)
    assert EdgeMask.from_slots(4, [0, 5]).bits == 33
    assert EdgeMask(4, 33).popcount == 2
    with pytest.raises(ValueError, match="does not fit"):
        EdgeMask(3, 0b1000)


def test_reynolds_x1_n4():
    """Test R(x_1) = (1/6)(x_1 + ... + x_6)."""
    image = reynolds(mono("x_1"), 4)
    assert len(image) == 6
    assert all(c == Fraction(1, 6) for c in image.terms.values())


def test_reynolds_perfect_matching_n4():
    """Test R(x_1*x_6) = (1/3)(x_1*x_6 + x_2*x_5 + x_3*x_4)."""
    expected = SymPoly.uniform([mono("x_1*x_6"), mono("x_2*x_5"), mono("x_3*x_4")], Fraction(1, 3))
    assert reynolds(mono("x_1*x_6"), 4) == expected


def test_reynolds_constant():
    """Test that the constant is fixed with coefficient 1."""
    assert reynolds(Monomial.constant(3), 3) == SymPoly.from_monomial(Monomial.constant(3))


def test_reynolds_n2_single_variable():
    """Test that both elements of S_2 fix x_1."""
    assert reynolds(mono("x_1^4", 1), 2) == SymPoly.from_monomial(mono("x_1^4", 1))


@pytest.mark.parametrize("text", ["x_1", "x_1^2*x_2", "x_1*x_2*x_3", "x_3^2*x_4^2"])
def test_reynolds_is_group_fixed_and_idempotent(text: str):
    """Test g(R(f)) = R(f), R(g f) = R(f) and R(R(f)) = R(f)."""
    f = mono(text)
    image = reynolds(f, 4)
    for g in pair_group(4)[::4]:
        assert image.apply(g) == image
        assert reynolds(f.apply(g), 4) == image
    twice = SymPoly()
    for term, c in image.terms.items():
        twice = twice + reynolds(term, 4).scale(c)
    assert twice == image


def test_reynolds_images_fixed_for_every_low_degree_monomial():
    """Test g(R(f)) = R(f) for all monomials of degree <= 3 in six variables and all of S_4."""
    group = pair_group(4)
    for degree in range(4):
        for slots in itertools.combinations_with_replacement(range(6), degree):
            image = reynolds(Monomial(tuple(slots.count(s) for s in range(6))), 4)
            assert all(image.apply(g) == image for g in group)


def test_reynolds_coefficients_sum_to_one():
    """Test that the average of n! images has total weight 1."""
    assert sum(reynolds(mono("x_1^2*x_3*x_7", 10), 5).terms.values()) == 1


def test_reynolds_errors():
    """Test the variable-count check and the guard."""
    with pytest.raises(ValueError, match="has 6 variables"):
        reynolds(mono("x_1", 3), 4)
    config = EnumerationConfig(guards=GuardConfig(reynolds_max_n=3))
    with pytest.raises(GuardError, match="guards.reynolds_max_n"):
        reynolds(mono("x_1"), 4, config=config)


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5, 6])
def test_component_dimensions_match_graph_counts(n: int):
    """Test dim of the degree-i component = a[i]."""
    counts = simple_genfunc_det(n)
    assert [component_dimension(n, i) for i in range(counts.m + 1)] == list(counts.a)


def test_component_dimensions_all_degrees():
    """Test the full list of graded dimensions, including n = 1."""
    assert component_dimensions(5) == [1, 1, 2, 4, 6, 6, 6, 4, 2, 1, 1]
    assert component_dimensions(1) == [1]
    with pytest.raises(ValueError, match="n must be >= 1"):
        component_dimensions(0)


def test_component_dimension_errors():
    """Test range validation."""
    with pytest.raises(ValueError, match="outside 0..3"):
        component_dimension(3, 4)
    with pytest.raises(ValueError, match="n must be >= 1"):
        component_dimension(0, 0)


def test_orbit_representatives_small():
    """Test minimum-mask orbit representatives."""
    assert [r.bits for r in orbit_representatives(3, 2)] == [0b011]
    # two adjacent edges ({1,2},{1,3}), then a perfect matching ({1,4},{2,3})
    assert [r.bits for r in orbit_representatives(4, 2)] == [3, 12]
    assert [r.bits for r in orbit_representatives(4, 0)] == [0]


@pytest.mark.parametrize("n", [4, 5])
def test_orbit_count_equals_dimension(n: int):
    """Test that each graded dimension is realized by distinct orbits."""
    m = n * (n - 1) // 2
    for i in range(m + 1):
        assert len(orbit_representatives(n, i)) == component_dimension(n, i)


def test_orbit_representatives_guard_and_range():
    """Test the orbit guard and the edge-count check."""
    config = EnumerationConfig(guards=GuardConfig(orbit_max_n=3))
    with pytest.raises(GuardError, match="guards.orbit_max_n"):
        orbit_representatives(4, 1, config=config)
    with pytest.raises(ValueError):
        orbit_representatives(3, 5)


def test_n4_generators_reproduce():
    """Test every printed expansion and gamma relation for four vertices."""
    report = reproduce_n4_generators()
    failed = [(c.name, c.detail) for c in report.checks if not c.passed]
    assert failed == []
    assert report.passed
    assert any(c.name == "R(x_1^2*x_2) expansion" for c in report.checks)
    assert len([c for c in report.checks if c.name.endswith("orbit structure")]) == len(N4_WEIGHTED_GENERATORS)


def test_n4_gamma_of_weighted_generator():
    """Test gamma(R(x_1^3*x_2)) = R(x_1*x_2)."""
    assert reynolds(mono("x_1^3*x_2"), 4).gamma() == reynolds(mono("x_1*x_2"), 4)
