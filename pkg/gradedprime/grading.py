"""Monoid gradings of finite near-rings.

A grading of N by a monoid G picks one normal subgroup N_g per g in G such
that every element splits uniquely as an ordered sum of one element from
each component, components of different grades commute additively, and
N_g N_h ⊆ N_gh.
"""
import itertools
import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, List, Optional, Tuple

from .errors import (
    ComponentNotNormal, ComponentsDontCommute, DecompositionNotTotal,
    DecompositionNotUnique, MalformedTable, MonoidMismatch, NotMultiplicative,
)
from .ideals import (
    Ideal, ideal_masks, mask_of, normal_subgroup_witness, subgroup_closure,
)
from .structures import FiniteMonoid, FiniteNearRing, validate_monoid
from . import masks

# Set up logging
logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class Grading:
    """A certified grading

    Attributes:
        carrier: The graded near-ring.
        monoid: The grading monoid.
        components: components[g] is the mask of N_g.
        decomposition: decomposition[x][g] is the grade-g component of x.
    """
    carrier: FiniteNearRing
    monoid: FiniteMonoid
    components: Tuple[int, ...]
    decomposition: Tuple[Tuple[int, ...], ...]

    def grades(self) -> range:
        return self.monoid.elements()


@dataclass(frozen=True, eq=False)
class GradedNearRing:
    """A near-ring bundled with a certified grading

    `factors` is set on componentwise direct products and holds the two
    graded factors in order.
    """
    near_ring: FiniteNearRing
    grading: Grading
    name: str = ""
    notes: str = ""
    factors: Optional[Tuple["GradedNearRing", "GradedNearRing"]] = None

    @property
    def monoid(self) -> FiniteMonoid:
        return self.grading.monoid

    @property
    def components(self) -> Tuple[int, ...]:
        return self.grading.components

    def grades(self) -> range:
        return self.grading.grades()


# --- Validation ---
def _component_masks(near_ring: FiniteNearRing, components) -> Tuple[int, ...]:
    result = []
    for component in components:
        if isinstance(component, (int, Ideal)):
            mask = mask_of(component)
        else:
            mask = masks.from_indices(component)
            if any(not 0 <= i < near_ring.order for i in component):
                raise MalformedTable("component lists an element outside the carrier")
        if mask >> near_ring.order:
            raise MalformedTable("component lists an element outside the carrier")
        result.append(mask)
    return tuple(result)


def validate_grading(near_ring: FiniteNearRing, monoid: FiniteMonoid, components) -> Grading:
    """Certify a family of components as a grading of `near_ring` by `monoid`

    Args:
        near_ring: Certified carrier.
        monoid: Certified grading monoid.
        components: One mask (or index list) per monoid element.

    Raises:
        MalformedTable, ComponentNotNormal, DecompositionNotUnique,
        DecompositionNotTotal, ComponentsDontCommute, NotMultiplicative
    """
    if len(components) != monoid.order:
        raise MalformedTable(f"expected {monoid.order} components, got {len(components)}")
    comps = _component_masks(near_ring, components)

    for g, component in enumerate(comps):
        witness = normal_subgroup_witness(near_ring, component)
        if witness is not None:
            raise ComponentNotNormal(f"component {g} is not a normal subgroup", (g,) + tuple(witness))

    # Ordered sums x_0 + x_1 + ... must hit every element exactly once
    member_lists = [masks.members(c) for c in comps]
    decomposition: Dict[int, Tuple[int, ...]] = {}
    for parts in itertools.product(*member_lists):
        total = near_ring.sum_over(parts)
        if total in decomposition:
            raise DecompositionNotUnique(
                f"{near_ring.label(total)} has two decompositions", (total, decomposition[total], parts))
        decomposition[total] = tuple(parts)
    for x in near_ring.elements():
        if x not in decomposition:
            raise DecompositionNotTotal(f"{near_ring.label(x)} is not a sum of components", (x,))

    add = near_ring.add_table
    for g, h in itertools.combinations(range(len(comps)), 2):
        for a in member_lists[g]:
            for b in member_lists[h]:
                if add[a, b] != add[b, a]:
                    raise ComponentsDontCommute(f"components {g} and {h} do not commute", (a, b))

    for g in monoid.elements():
        for h in monoid.elements():
            target = comps[monoid.op(g, h)]
            for a in member_lists[g]:
                for b in member_lists[h]:
                    if not masks.get_bit(target, int(near_ring.mul_table[a, b])):
                        raise NotMultiplicative(
                            f"N_{g} N_{h} is not inside N_{monoid.op(g, h)}", (g, h, a, b))

    return Grading(carrier=near_ring, monoid=monoid, components=comps,
                   decomposition=tuple(decomposition[x] for x in near_ring.elements()))


def make_graded(near_ring: FiniteNearRing, monoid: FiniteMonoid, components,
                name: Optional[str] = None, notes: str = "") -> GradedNearRing:
    grading = validate_grading(near_ring, monoid, components)
    return GradedNearRing(near_ring=near_ring, grading=grading,
                          name=near_ring.name if name is None else name, notes=notes)


def trivial_monoid() -> FiniteMonoid:
    return validate_monoid(1, [[0]], 0, name="trivial")


def trivial_grading(near_ring: FiniteNearRing, name: Optional[str] = None,
                    notes: str = "") -> GradedNearRing:
    """Single-component grading by the one-element monoid"""
    return make_graded(near_ring, trivial_monoid(), [near_ring.full_mask], name=name, notes=notes)


# --- Components and decomposition ---
def component(graded: GradedNearRing, subset, g: int) -> int:
    """S_g = S ∩ N_g"""
    return mask_of(subset) & graded.components[g]


def decompose(graded: GradedNearRing, x: int) -> Tuple[int, ...]:
    """Per-grade components of x, indexed by grade"""
    return graded.grading.decomposition[x]


def homogeneous_elements(graded: GradedNearRing) -> int:
    """Mask of the union of all components"""
    result = 0
    for c in graded.components:
        result |= c
    return result


def grade_of(graded: GradedNearRing, x: int) -> List[int]:
    """Grades whose component contains x (all grades for zero)"""
    return [g for g in graded.grades() if masks.get_bit(graded.components[g], x)]


def regenerate_from_components(graded: GradedNearRing, subset) -> int:
    """Additive subgroup generated by the union of the components of `subset`"""
    union = 0
    for g in graded.grades():
        union |= component(graded, subset, g)
    return subgroup_closure(graded.near_ring, union)


def graded_ideal_criteria(graded: GradedNearRing, subset) -> Tuple[bool, bool]:
    """(regeneration criterion, decomposition criterion) for an ideal

    Regeneration: the components of I generate I.
    Decomposition: every component of every x in I lies in I.
    """
    subset = mask_of(subset)
    regenerates = regenerate_from_components(graded, subset) == subset
    closed = all(masks.get_bit(subset, part)
                 for x in masks.members(subset) for part in decompose(graded, x))
    return regenerates, closed


def is_graded_ideal(graded: GradedNearRing, subset) -> bool:
    regenerates, closed = graded_ideal_criteria(graded, subset)
    if regenerates != closed:
        logger.error(f"Graded criteria disagree on {graded.near_ring.format(mask_of(subset))} in {graded.name}")
    return regenerates


@lru_cache(maxsize=256)
def _graded_ideal_masks(graded: GradedNearRing) -> Tuple[int, ...]:
    return tuple(m for m in ideal_masks(graded.near_ring) if is_graded_ideal(graded, m))


def graded_ideal_masks(graded: GradedNearRing) -> List[int]:
    """Masks of graded ideals in canonical order"""
    return list(_graded_ideal_masks(graded))


def graded_ideals(graded: GradedNearRing) -> List[Ideal]:
    return [Ideal(graded.near_ring, m) for m in graded_ideal_masks(graded)]


def require_same_monoid(first: FiniteMonoid, second: FiniteMonoid) -> None:
    if not first.same_as(second):
        raise MonoidMismatch(f"monoids '{first.name}' and '{second.name}' differ")
