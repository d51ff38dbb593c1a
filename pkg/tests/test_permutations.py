"""Tests for permutations, cycle types, conjugacy classes and the pair action."""
from __future__ import annotations

import math

import pytest

from src.errors import GuardError
from src.groups.permutations import (
    CycleType,
    EdgeIndexing,
    PairPermutation,
    Permutation,
    class_representative,
    class_size,
    cycle_type,
    edge_indexing,
    enumerate_partition_classes,
    enumerate_permutations,
    induce_pair_perm,
    pair_cycle_type_of_class,
    partition_count,
)
from src.pipeline.config import EnumerationConfig, GuardConfig


def test_permutation_rejects_non_bijection():
    """Test that repeated images are rejected."""
    with pytest.raises(ValueError):
        Permutation((0, 0, 1))


def test_from_cycles_is_one_based():
    """Test cycle notation (1 2 3) on 4 points."""
    p = Permutation.from_cycles(4, [(1, 2, 3)])
    assert p.images == (1, 2, 0, 3)
    assert p.cycles() == [(0, 1, 2), (3,)]


def test_compose_and_inverse():
    """Test that p * p^-1 is the identity and composition applies the right factor first."""
    p = Permutation.from_cycles(4, [(1, 2, 3, 4)])
    q = Permutation.from_cycles(4, [(1, 2)])
    assert p.compose(p.inverse()) == Permutation.identity(4)
    assert p.compose(q)(0) == p(q(0))


def test_cycle_type_of_permutation():
    """Test cycle type counting."""
    ct = cycle_type(Permutation.from_cycles(5, [(1, 2), (3, 4, 5)]))
    assert ct.j(2) == 1
    assert ct.j(3) == 1
    assert ct.degree == 5
    assert ct.num_cycles == 2
    assert ct.lengths() == [3, 2]


def test_cycle_type_from_lengths_normalizes():
    """Test that from_lengths pads counts to the degree."""
    ct = CycleType.from_lengths([2, 1, 1])
    assert ct.counts == (2, 1, 0, 0)
    assert str(ct) == "1^2 2^1"


def test_enumerate_permutations_counts():
    """Test that S_n has n! elements."""
    assert sum(1 for _ in enumerate_permutations(4)) == 24


def test_enumerate_permutations_guard():
    """Test the permutation guard names the key."""
    config = EnumerationConfig(guards=GuardConfig(permutation_max_n=3))
    with pytest.raises(GuardError, match="guards.permutation_max_n"):
        list(enumerate_permutations(4, config=config))


def test_enumerate_permutations_rejects_zero():
    """Test that n=0 is an input error."""
    with pytest.raises(ValueError, match="n must be >= 1"):
        list(enumerate_permutations(0))


def test_partition_classes_n4_order_and_sizes():
    """Test class order 1^4 first and (4) last with the standard sizes."""
    classes = enumerate_partition_classes(4)
    assert [c.cycle_type.lengths() for c in classes] == [[1, 1, 1, 1], [2, 1, 1], [2, 2], [3, 1], [4]]
    assert [c.class_size for c in classes] == [1, 6, 3, 8, 6]


@pytest.mark.parametrize("n", [1, 2, 5, 8, 12])
def test_class_sizes_sum_to_factorial(n: int):
    """Test that class sizes partition S_n."""
    assert sum(c.class_size for c in enumerate_partition_classes(n)) == math.factorial(n)


def test_partition_count_20():
    """Test p(20) = 627 and agreement with the class list."""
    assert partition_count(20) == 627
    assert len(enumerate_partition_classes(20)) == 627
    assert sum(c.class_size for c in enumerate_partition_classes(20)) == math.factorial(20)


def test_class_size_matches_enumeration():
    """Test class sizes against a literal count over S_5."""
    tally: dict[CycleType, int] = {}
    for sigma in enumerate_permutations(5):
        ct = cycle_type(sigma)
        tally[ct] = tally.get(ct, 0) + 1
    for ct, count in tally.items():
        assert class_size(ct) == count


def test_class_representative_has_its_type():
    """Test representatives: cycles in decreasing length over consecutive vertices."""
    ct = CycleType.from_lengths([3, 2, 1])
    rep = class_representative(ct)
    assert rep.images == (1, 2, 0, 4, 3, 5)
    assert cycle_type(rep) == ct


def test_edge_indexing_lexicographic():
    """Test slot order {1,2},{1,3},{1,4},{2,3},{2,4},{3,4} (0-based here)."""
    idx = EdgeIndexing(4)
    assert idx.pairs == ((0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3))
    assert idx.slot_of(3, 1) == 4
    assert idx.m == 6
    with pytest.raises(ValueError, match="distinct"):
        idx.slot_of(2, 2)


def test_induce_pair_perm_transposition():
    """Test that (1 2) on 3 vertices fixes {1,2} and swaps {1,3} with {2,3}."""
    sigma = Permutation.from_cycles(3, [(1, 2)])
    p = induce_pair_perm(sigma, edge_indexing(3))
    assert p.images == (0, 2, 1)


def test_induce_pair_perm_degree_mismatch():
    """Test that mismatched n is rejected."""
    with pytest.raises(ValueError, match="degree mismatch"):
        induce_pair_perm(Permutation.identity(3), edge_indexing(4))


def test_induce_pair_perm_is_homomorphism():
    """Test (sigma tau)' = sigma' tau' for every pair in S_5."""
    idx = edge_indexing(5)
    induced = {sigma: induce_pair_perm(sigma, idx) for sigma in enumerate_permutations(5)}
    for sigma, sigma_pair in induced.items():
        for tau, tau_pair in induced.items():
            assert induced[sigma.compose(tau)] == sigma_pair.compose(tau_pair)


@pytest.mark.parametrize("n", [3, 4, 5, 6])
def test_induce_pair_perm_is_injective(n: int):
    """Test that distinct vertex permutations induce distinct pair permutations for n >= 3."""
    idx = edge_indexing(n)
    images = {induce_pair_perm(sigma, idx) for sigma in enumerate_permutations(n)}
    assert len(images) == math.factorial(n)


def test_induce_pair_perm_collapses_for_two_vertices():
    """Test that both elements of S_2 fix the single pair."""
    idx = edge_indexing(2)
    assert {induce_pair_perm(sigma, idx) for sigma in enumerate_permutations(2)} == {PairPermutation((0,), 2)}


def test_pair_permutation_validation():
    """Test slot count and bijectivity checks."""
    with pytest.raises(ValueError, match="expected 3 slot images"):
        PairPermutation((0, 1), 3)
    with pytest.raises(ValueError, match="permutation"):
        PairPermutation((0, 0, 1), 3)


def test_pair_cycle_type_is_class_constant():
    """Test that every element of a class induces the traced pair type."""
    idx = edge_indexing(5)
    by_class = {c.cycle_type: pair_cycle_type_of_class(c.cycle_type, idx) for c in enumerate_partition_classes(5)}
    for sigma in enumerate_permutations(5):
        assert cycle_type(induce_pair_perm(sigma, idx)) == by_class[cycle_type(sigma)]
