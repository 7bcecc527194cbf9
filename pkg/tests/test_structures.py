import numpy as np
import pytest

from gradedprime.corpus import cyclic_near_ring, map_near_ring
from gradedprime.errors import (
    AddNotGroup, BadIdentity, MalformedTable, MulNotAssociative, NotAssociative,
    NotRightDistributive, OrderCapExceeded,
)
from gradedprime.structures import (
    canonicalize, diagnostics, has_unity, is_isomorphic, is_ring, is_zero_symmetric,
    left_distributivity_witness, relabel, validate_monoid, validate_near_ring,
)

Z2_ADD = [[0, 1], [1, 0]]


def test_cyclic_ring_is_certified():
    z6 = cyclic_near_ring(6)
    assert z6.order == 6
    assert z6.zero == 0
    assert z6.one == 1
    assert z6.add(4, 5) == 3
    assert z6.mul(4, 5) == 2
    assert z6.neg(2) == 4
    assert is_ring(z6)


def test_validation_is_deterministic():
    first = cyclic_near_ring(5)
    second = cyclic_near_ring(5)
    assert np.array_equal(first.add_table, second.add_table)
    assert np.array_equal(first.mul_table, second.mul_table)
    assert (first.zero, first.one) == (second.zero, second.one)


def test_tables_are_read_only():
    z3 = cyclic_near_ring(3)
    with pytest.raises(ValueError):
        z3.add_table[0, 0] = 1


def test_or_addition_is_not_a_group():
    with pytest.raises(AddNotGroup) as info:
        validate_near_ring(2, [[0, 1], [1, 1]], [[0, 0], [0, 0]])
    assert info.value.witness == (1,)


def test_non_associative_multiplication():
    with pytest.raises(MulNotAssociative) as info:
        validate_near_ring(2, Z2_ADD, [[1, 0], [0, 0]])
    assert len(info.value.witness) == 3


def test_right_distributivity_failure_witness():
    # ab = b is associative but (a+b)c = c while ac+bc = 2c
    with pytest.raises(NotRightDistributive) as info:
        validate_near_ring(2, Z2_ADD, [[0, 1], [0, 1]])
    assert info.value.witness == (0, 0, 1)


@pytest.mark.parametrize("add, mul", [
    ([[0, 1]], [[0, 0], [0, 0]]),
    ([[0, 1], [1, 2]], [[0, 0], [0, 0]]),
    ("not a table", [[0, 0], [0, 0]]),
])
def test_malformed_tables(add, mul):
    with pytest.raises(MalformedTable):
        validate_near_ring(2, add, mul)


def test_order_cap():
    with pytest.raises(OrderCapExceeded):
        validate_near_ring(65, np.zeros((65, 65), dtype=int), np.zeros((65, 65), dtype=int))


def test_monoid_bad_identity():
    with pytest.raises(BadIdentity):
        validate_monoid(2, [[1, 0], [0, 0]], 0)


def test_monoid_not_associative():
    table = [[0, 1, 2], [1, 2, 0], [2, 1, 1]]
    with pytest.raises(NotAssociative):
        validate_monoid(3, table, 0)


def test_monoid_power():
    c3 = validate_monoid(3, [[(a + b) % 3 for b in range(3)] for a in range(3)], 0)
    assert c3.power(1, 0) == 0
    assert c3.power(1, 2) == 2
    assert c3.power(2, 2) == 1


def test_map_near_ring_is_not_a_ring():
    mz2 = map_near_ring(2)
    assert mz2.order == 4
    assert not is_ring(mz2)
    assert not is_zero_symmetric(mz2)
    assert has_unity(mz2) and mz2.one == 2
    a, b, c = left_distributivity_witness(mz2)
    assert mz2.mul(a, mz2.add(b, c)) != mz2.add(mz2.mul(a, b), mz2.mul(a, c))


def test_map_near_ring_composition_convention():
    mz2 = map_near_ring(2)
    # index f(0) + 2 f(1): 1 is x+1, 2 is the identity, 3 is the constant 1
    assert mz2.mul(1, 1) == 2
    assert mz2.mul(1, 0) == 3
    assert all(mz2.mul(3, n) == 3 for n in range(4))
    assert all(mz2.mul(2, n) == n for n in range(4))
    assert mz2.label(2) == "(0,1)"


def test_diagnostics_report_flags():
    report = diagnostics(cyclic_near_ring(4))
    assert report["ring"] is True
    assert report["commutative"] is True
    assert report["left_distributivity_witness"] is None


def test_canonicalize_moves_zero_to_index_zero():
    z3 = cyclic_near_ring(3)
    shuffled = relabel(z3, [2, 0, 1])
    assert shuffled.zero == 2
    fixed = canonicalize(shuffled)
    assert fixed.zero == 0
    assert is_isomorphic(fixed, z3)


def test_isomorphism_distinguishes_structures():
    assert is_isomorphic(cyclic_near_ring(4), cyclic_near_ring(4))
    assert not is_isomorphic(cyclic_near_ring(4), map_near_ring(2))
    assert not is_isomorphic(cyclic_near_ring(4), cyclic_near_ring(5))
