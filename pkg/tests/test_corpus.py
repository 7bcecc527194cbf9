import pytest

from gradedprime.corpus import (
    corpus, get_entry, list_entries, map_near_ring, product_pairs, reduction_hom, reduction_pairs,
    z2_multiplicative, z2_product,
)
from gradedprime.errors import UnknownStructure
from gradedprime.ideals import ideal_masks
from gradedprime.primality import graded_primes
from gradedprime.structures import has_unity, is_abelian, is_ring, is_zero_symmetric, left_distributivity_witness


def test_every_entry_builds():
    names = list_entries()
    assert "z6-or" in names and "gauss4" in names and "s3-zero" in names
    assert [e.name for e in corpus()] == names
    for e in corpus():
        assert e.structure.name == e.name
        assert e.notes
        assert e.structure.notes == e.notes


def test_entries_are_cached():
    assert get_entry("z6-or") is get_entry("z6-or")


def test_unknown_entry():
    with pytest.raises(UnknownStructure):
        get_entry("z7-xor")


def test_map_near_ring_layout():
    mz2 = map_near_ring(2)
    assert mz2.order == 4
    assert mz2.one == 2
    assert mz2.labels[3] == "(1,1)"
    # const-1 composed with anything is const-1
    assert all(mz2.mul(3, g) == 3 for g in range(4))
    assert left_distributivity_witness(mz2) is not None
    assert not is_zero_symmetric(mz2)


def test_mz3_is_a_proper_near_ring(entry):
    mz3 = entry("mz3").near_ring
    assert mz3.order == 27
    assert mz3.one == 1 * 3 + 2 * 9
    assert not is_ring(mz3)
    assert ideal_masks(mz3)[0] == mz3.zero_mask


def test_s3_zero_is_non_abelian(entry):
    s3 = entry("s3-zero").near_ring
    assert not is_abelian(s3)
    assert not has_unity(s3)
    assert len(ideal_masks(s3)) == 3


def test_map_entries_record_a_left_distributivity_failure(entry):
    for name in ("mz2", "mz2-or", "mz3"):
        near_ring = entry(name).near_ring
        a, b, c = left_distributivity_witness(near_ring)
        assert near_ring.mul(a, near_ring.add(b, c)) != near_ring.add(near_ring.mul(a, b), near_ring.mul(a, c))
        assert f"(a, b, c) = ({a}, {b}, {c})" in get_entry(name).notes
        assert get_entry(name).structure.notes == get_entry(name).notes
    assert get_entry("mz2").notes.endswith("(a, b, c) = (1, 0, 0)")


def test_gaussian_labels(gauss4):
    assert gauss4.near_ring.labels[5] == "1+i"
    assert gauss4.near_ring.labels[8] == "2i"


def test_registered_homomorphisms():
    for _, source, target in reduction_pairs():
        assert reduction_hom(source, target).surjective
    for first, second in product_pairs():
        get_entry(first), get_entry(second)


def test_z2_entries():
    z2 = z2_multiplicative().structure
    assert z2.components == (1, 3)
    assert graded_primes(z2) == [1]
    assert 1 not in graded_primes(z2_product().structure)
