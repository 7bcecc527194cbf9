import pytest

from gradedprime import masks
from gradedprime.corpus import cyclic_group_monoid, cyclic_near_ring, or_monoid
from gradedprime.errors import (
    ComponentNotNormal, DecompositionNotTotal, DecompositionNotUnique, MalformedTable,
    NotMultiplicative,
)
from gradedprime.grading import (
    component, decompose, grade_of, graded_ideal_criteria, graded_ideal_masks, homogeneous_elements,
    is_graded_ideal, make_graded, regenerate_from_components, trivial_grading, validate_grading,
)
from gradedprime.ideals import ideal_masks

m = masks.from_indices


def test_group_grading_of_z2_is_not_multiplicative():
    z2 = cyclic_near_ring(2)
    with pytest.raises(NotMultiplicative) as info:
        validate_grading(z2, cyclic_group_monoid(2), [m([0]), z2.full_mask])
    assert info.value.witness == (1, 1, 1, 1)


def test_or_grading_of_z6():
    z6 = cyclic_near_ring(6)
    grading = validate_grading(z6, or_monoid(), [z6.full_mask, m([0])])
    assert grading.components == (z6.full_mask, 1)
    assert grading.decomposition[5] == (5, 0)


@pytest.mark.parametrize("components, error", [
    ([m([0, 1]), m([0])], ComponentNotNormal),
    ([(1 << 6) - 1, (1 << 6) - 1], DecompositionNotUnique),
    ([m([0]), m([0, 3])], DecompositionNotTotal),
])
def test_invalid_gradings(components, error):
    with pytest.raises(error):
        validate_grading(cyclic_near_ring(6), or_monoid(), components)


def test_component_count_must_match_monoid():
    with pytest.raises(MalformedTable):
        validate_grading(cyclic_near_ring(6), or_monoid(), [m(range(6))])


def test_index_list_components_are_accepted():
    z6 = cyclic_near_ring(6)
    graded = make_graded(z6, or_monoid(), [list(range(6)), [0]], name="z6")
    assert graded.components == (z6.full_mask, 1)


def test_decompose(z6, entry):
    assert decompose(z6, 5) == (5, 0)
    gauss3 = entry("gauss3")
    # 1 + 2i has index 1 + 3*2
    assert decompose(gauss3, 7) == (1, 6)
    assert gauss3.near_ring.label(7) == "1+2i"


def test_homogeneous_elements(entry):
    gauss3 = entry("gauss3")
    assert homogeneous_elements(gauss3) == m([0, 1, 2, 3, 6])
    assert grade_of(gauss3, 0) == [0, 1]
    assert grade_of(gauss3, 6) == [1]


def test_component_of_a_subset(gauss4):
    q1 = m([0, 2, 5, 7, 8, 10, 13, 15])
    assert component(gauss4, q1, 0) == m([0, 2])
    assert component(gauss4, q1, 1) == m([0, 8])


def test_ungraded_ideal_of_gauss2(entry):
    gauss2 = entry("gauss2")
    one_plus_i = m([0, 3])
    assert not is_graded_ideal(gauss2, one_plus_i)
    assert regenerate_from_components(gauss2, one_plus_i) == m([0])


def test_graded_ideals_of_gauss4(gauss4):
    assert graded_ideal_masks(gauss4) == [m([0]), m([0, 2, 8, 10]), gauss4.near_ring.full_mask]


@pytest.mark.parametrize("name", ["z6-or", "mz2-or", "gauss2", "gauss4", "z2xz2", "z6xz2"])
def test_graded_criteria_agree(entry, name):
    graded = entry(name)
    for ideal in ideal_masks(graded.near_ring):
        regenerates, closed = graded_ideal_criteria(graded, ideal)
        assert regenerates == closed


def test_trivial_grading_grades_every_ideal(mz2):
    graded = trivial_grading(mz2.near_ring)
    assert graded_ideal_masks(graded) == ideal_masks(mz2.near_ring)
