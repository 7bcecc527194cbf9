import itertools

import pytest

from gradedprime import masks
from gradedprime.errors import EnumerationBudgetExceeded, NotAnIdeal, NotProper
from gradedprime.ideals import (
    CLOSURE_RULES, Ideal, certify, enumerate_additive_subgroups, enumerate_ideals,
    enumerate_normal_subgroups, generated_mask, ideal_generated_by, ideal_masks, ideal_product,
    ideal_sum, ideal_witness, intersection, is_ideal, is_maximal_ideal, maximal_ideals,
    set_power, set_product,
)

m = masks.from_indices

# Corpus entries small enough for a 2^n subset sweep
SMALL_ENTRIES = [
    "z1-or", "z2-or", "z2-mult", "z6-or", "z8-or", "mz2", "mz2-or", "gauss2", "gauss3",
    pytest.param("gauss4", marks=pytest.mark.slow), "s3-zero", "z2xz2", "z6xz2",
]


def test_z6_ideals_in_canonical_order(z6):
    n = z6.near_ring
    assert ideal_masks(n) == [m([0]), m([0, 3]), m([0, 2, 4]), n.full_mask]


def test_z8_ideals(z8):
    n = z8.near_ring
    assert ideal_masks(n) == [m([0]), m([0, 4]), m([0, 2, 4, 6]), n.full_mask]


def test_map_near_ring_ideals(mz2):
    n = mz2.near_ring
    assert len(enumerate_normal_subgroups(n)) == 5
    assert ideal_masks(n) == [m([0]), m([0, 3]), n.full_mask]


def test_enumerate_ideals_wraps_masks(z6):
    ideals = enumerate_ideals(z6.near_ring)
    assert all(isinstance(i, Ideal) for i in ideals)
    assert [i.size for i in ideals] == [1, 2, 3, 6]
    assert 3 in ideals[1] and 2 not in ideals[1]
    assert str(ideals[1]) == "{0, 3}"


def test_workers_do_not_change_results(entry):
    n = entry("mz3").near_ring
    assert ideal_masks(n, workers=1) == ideal_masks(n, workers=3)


def test_additive_subgroups_of_mz3(entry):
    # (Z_3)^3 has 1 + 13 + 13 + 1 subgroups
    assert len(enumerate_additive_subgroups(entry("mz3").near_ring)) == 28


def test_budget_is_enforced(z8):
    with pytest.raises(EnumerationBudgetExceeded):
        enumerate_additive_subgroups(z8.near_ring, budget=2)


def test_ideal_witnesses(z6, mz2):
    assert ideal_witness(z6.near_ring, m([0, 2])) == ("add", 2, 2)
    assert ideal_witness(z6.near_ring, m([1, 2]))[0] == "zero"
    # {0, identity} is a subgroup of M(Z_2) but id∘const1 leaves it
    witness = ideal_witness(mz2.near_ring, m([0, 2]))
    assert witness[0] == "right"
    assert ideal_witness(z6.near_ring, m([0, 3])) is None


def test_certify(z6):
    assert certify(z6.near_ring, m([0, 3])).mask == m([0, 3])
    with pytest.raises(NotAnIdeal):
        certify(z6.near_ring, m([0, 1]))


def test_set_products(z6, z8):
    assert set_product(z6.near_ring, m([0, 2, 4]), m([0, 3])) == m([0])
    assert set_power(z8.near_ring, m([0, 4]), 2) == m([0])
    assert set_power(z8.near_ring, m([0, 2, 4, 6]), 3) == m([0])
    assert set_power(z6.near_ring, m([0, 2, 4]), 2) == m([0, 2, 4])
    assert set_product(z6.near_ring, 0, m([1])) == 0


def test_generated_ideals(z6, mz2):
    assert ideal_generated_by(mz2.near_ring, m([3])).mask == m([0, 3])
    assert ideal_generated_by(z6.near_ring, m([2])).mask == m([0, 2, 4])
    assert ideal_generated_by(z6.near_ring, m([2, 3])).mask == z6.near_ring.full_mask
    assert ideal_generated_by(z6.near_ring, 0).mask == m([0])


def test_generated_ideal_is_least(entry):
    n = entry("mz3").near_ring
    for x in range(0, n.order, 5):
        generated = generated_mask(n, m([x]))
        assert is_ideal(n, generated)
        containing = [i for i in ideal_masks(n) if masks.get_bit(i, x)]
        assert all(masks.is_subset(generated, i) for i in containing)


def test_every_closure_rule_matters(entry, mz2):
    s3 = entry("s3-zero").near_ring
    transposition = m([1])
    assert generated_mask(s3, transposition) == s3.full_mask
    assert generated_mask(s3, transposition, CLOSURE_RULES - {"conjugate"}) == m([0, 1])

    identity = m([2])
    assert generated_mask(mz2.near_ring, identity) == mz2.near_ring.full_mask
    assert generated_mask(mz2.near_ring, identity, CLOSURE_RULES - {"right"}) == m([0, 2])

    mz3 = entry("mz3").near_ring
    constants = m([0, 13, 26])
    assert generated_mask(mz3, constants, CLOSURE_RULES - {"left"}) == constants
    assert generated_mask(mz3, constants) != constants


def test_ideal_arithmetic(z6):
    ideals = enumerate_ideals(z6.near_ring)
    zero, three, evens, whole = ideals
    assert ideal_sum(three, evens).mask == whole.mask
    assert intersection(three, evens).mask == zero.mask
    assert ideal_product(evens, three).mask == zero.mask
    assert ideal_product(evens, evens).mask == evens.mask


def test_maximal_ideals(z6, z8):
    n = z6.near_ring
    assert is_maximal_ideal(n, m([0, 3]))
    assert is_maximal_ideal(n, m([0, 2, 4]))
    assert not is_maximal_ideal(n, m([0]))
    assert maximal_ideals(z8.near_ring) == [m([0, 2, 4, 6])]
    with pytest.raises(NotProper):
        is_maximal_ideal(n, n.full_mask)


def test_s3_ideals_are_normal_subgroups(entry):
    s3 = entry("s3-zero").near_ring
    assert len(enumerate_additive_subgroups(s3)) == 6
    assert ideal_masks(s3) == [m([0]), m([0, 3, 4]), s3.full_mask]


@pytest.mark.parametrize("name", SMALL_ENTRIES)
def test_enumeration_matches_subset_sweep(entry, name):
    n = entry(name).near_ring
    swept = [s for s in range(1 << n.order) if s & n.zero_mask and is_ideal(n, s)]
    assert ideal_masks(n) == masks.canonical_order(swept)


@pytest.mark.parametrize("name", SMALL_ENTRIES)
def test_generated_ideal_is_meet_of_containing_ideals(entry, name):
    n = entry(name).near_ring
    ideals = ideal_masks(n)
    elements = list(n.elements())
    seeds = [m([x]) for x in elements] + [m(pair) for pair in itertools.combinations(elements, 2)]
    for seed in seeds:
        meet = n.full_mask
        for i in ideals:
            if masks.is_subset(seed, i):
                meet &= i
        assert generated_mask(n, seed) == meet
        assert ideal_generated_by(n, seed).mask == meet


def _bracketings(near_ring, subset, exponent):
    """Set products of `exponent` copies of subset, over every bracketing"""
    if exponent == 1:
        return {subset}
    return {set_product(near_ring, left, right)
            for k in range(1, exponent)
            for left in _bracketings(near_ring, subset, k)
            for right in _bracketings(near_ring, subset, exponent - k)}


@pytest.mark.parametrize("name", ["z6-or", "z8-or", "mz2", "gauss4", "s3-zero", "z6xz2"])
def test_set_power_ignores_bracketing(entry, name):
    graded = entry(name)
    n = graded.near_ring
    subsets = ideal_masks(n) + [m([x]) for x in n.elements()] + list(graded.components)
    for s in subsets:
        for exponent in range(1, 5):
            assert _bracketings(n, s, exponent) == {set_power(n, s, exponent)}
