"""Homomorphisms, quotients and componentwise direct products."""
import logging
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

import numpy as np

from .config import MAX_ORDER
from .errors import (
    ImageNotIdeal, MalformedTable, NotAdditive, NotMultiplicativeHom,
    OrderCapExceeded, QuotientGradingInvalid, ValidationError,
)
from .grading import (
    GradedNearRing, component, require_same_monoid, validate_grading,
)
from .ideals import Ideal, certify, ideal_masks, is_ideal, mask_of, set_sum
from .primality import require_proper_graded
from .structures import FiniteNearRing, first_violation, validate_near_ring
from . import masks

# Set up logging
logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class NearRingHom:
    """A certified near-ring homomorphism

    Attributes:
        source: Domain.
        target: Codomain.
        mapping: mapping[x] is the image of x.
        surjective: Whether every target element is hit.
        kernel: Mask of the preimage of zero.
    """
    source: FiniteNearRing
    target: FiniteNearRing
    mapping: Tuple[int, ...]
    surjective: bool
    kernel: int

    def __call__(self, x: int) -> int:
        return self.mapping[x]


def validate_hom(source: FiniteNearRing, target: FiniteNearRing, mapping: Sequence[int]) -> NearRingHom:
    """Certify a map of carriers as a homomorphism

    Raises:
        MalformedTable, NotAdditive, NotMultiplicativeHom
    """
    if len(mapping) != source.order:
        raise MalformedTable(f"map has {len(mapping)} entries, expected {source.order}")
    m = np.asarray(mapping, dtype=np.int64)
    if m.size and (m.min() < 0 or m.max() >= target.order):
        bad = first_violation((m < 0) | (m >= target.order))
        raise MalformedTable("map sends an element outside the target", bad)
    bad = first_violation(m[source.add_table] != target.add_table[m[:, None], m[None, :]])
    if bad is not None:
        raise NotAdditive("h(a+b) != h(a)+h(b)", bad)
    bad = first_violation(m[source.mul_table] != target.mul_table[m[:, None], m[None, :]])
    if bad is not None:
        raise NotMultiplicativeHom("h(ab) != h(a)h(b)", bad)
    kernel = masks.from_indices(np.nonzero(m == target.zero)[0].tolist())
    if not is_ideal(source, kernel):
        raise ValidationError("kernel is not an ideal")
    surjective = len(set(m.tolist())) == target.order
    return NearRingHom(source=source, target=target, mapping=tuple(int(v) for v in m),
                       surjective=surjective, kernel=kernel)


def identity_hom(near_ring: FiniteNearRing) -> NearRingHom:
    return validate_hom(near_ring, near_ring, list(near_ring.elements()))


def compose(second: NearRingHom, first: NearRingHom) -> NearRingHom:
    """second ∘ first"""
    if first.target is not second.source:
        raise ValidationError("homomorphisms do not compose")
    return validate_hom(first.source, second.target, [second.mapping[v] for v in first.mapping])


def kernel(hom: NearRingHom) -> Ideal:
    return Ideal(hom.source, hom.kernel)


def image(hom: NearRingHom, subset) -> int:
    return masks.from_indices(hom.mapping[x] for x in masks.members(mask_of(subset)))


def preimage(hom: NearRingHom, subset) -> int:
    subset = mask_of(subset)
    return masks.from_indices(x for x, y in enumerate(hom.mapping) if masks.get_bit(subset, y))


def preimage_ideal(hom: NearRingHom, subset) -> Ideal:
    return certify(hom.source, preimage(hom, subset))


def image_ideal(hom: NearRingHom, subset) -> Ideal:
    """Image of an ideal, raising ImageNotIdeal when it fails to be one"""
    result = image(hom, subset)
    if not is_ideal(hom.target, result):
        raise ImageNotIdeal(f"image {hom.target.format(result)} is not an ideal")
    return Ideal(hom.target, result)


def graded_preimage(hom: NearRingHom, source: GradedNearRing, subset, g: int) -> int:
    """Homogeneous preimage {n in N_g : h(n) in subset}"""
    return preimage(hom, subset) & source.components[g]


def component_respect_witness(hom: NearRingHom, source: GradedNearRing,
                              target: GradedNearRing) -> Optional[Tuple[int, int]]:
    """First (ideal, grade) with h(I_g) != h(I)_g, None when h respects components"""
    require_same_monoid(source.monoid, target.monoid)
    for ideal in ideal_masks(source.near_ring):
        whole = image(hom, ideal)
        for g in source.grades():
            if image(hom, component(source, ideal, g)) != whole & target.components[g]:
                return ideal, g
    return None


def hom_respects_components(hom: NearRingHom, source: GradedNearRing, target: GradedNearRing) -> bool:
    return component_respect_witness(hom, source, target) is None


# --- Quotients ---
@dataclass(frozen=True, eq=False)
class QuotientStructure:
    """N/Q with its projection

    Attributes:
        graded: The graded quotient.
        cosets: cosets[k] is the mask of the k-th coset, ordered by least member.
        projection: Certified surjection N -> N/Q with kernel Q.
        ideal: Mask of Q.
    """
    graded: GradedNearRing
    cosets: Tuple[int, ...]
    projection: NearRingHom
    ideal: int


def _coset_partition(near_ring: FiniteNearRing, ideal: int) -> Tuple[Tuple[int, ...], np.ndarray]:
    coset_of = np.full(near_ring.order, -1, dtype=np.int64)
    cosets = []
    idx = masks.member_array(ideal)
    for x in near_ring.elements():
        if coset_of[x] >= 0:
            continue
        coset = masks.from_array(near_ring.add_table[x, idx])
        coset_of[masks.members(coset)] = len(cosets)
        cosets.append(coset)
    return tuple(cosets), coset_of


def _quotient_table(table: np.ndarray, coset_of: np.ndarray, representatives: List[int], name: str) -> np.ndarray:
    reps = np.asarray(representatives, dtype=np.int64)
    result = coset_of[table[reps[:, None], reps[None, :]]]
    # Every member of each coset must agree with the representative
    induced = result[coset_of[:, None], coset_of[None, :]]
    bad = first_violation(coset_of[table] != induced)
    if bad is not None:
        raise ValidationError(f"{name} is not well defined on cosets", bad)
    return result


def quotient(graded: GradedNearRing, ideal) -> QuotientStructure:
    """Quotient by a proper graded ideal, with induced grading π(N_g)

    Raises:
        NotProper, NotGraded, QuotientGradingInvalid
    """
    q = require_proper_graded(graded, ideal)
    near_ring = graded.near_ring
    cosets, coset_of = _coset_partition(near_ring, q)
    representatives = [masks.members(c)[0] for c in cosets]
    add = _quotient_table(near_ring.add_table, coset_of, representatives, "addition")
    mul = _quotient_table(near_ring.mul_table, coset_of, representatives, "multiplication")
    labels = ["[" + near_ring.label(r) + "]" for r in representatives]
    name = f"{graded.name}/{near_ring.format(q)}"
    target = validate_near_ring(len(cosets), add, mul, labels=labels, name=name)
    projection = validate_hom(near_ring, target, coset_of.tolist())
    if projection.kernel != q:
        raise ValidationError("projection kernel differs from the ideal")
    components = [image(projection, c) for c in graded.components]
    try:
        grading = validate_grading(target, graded.monoid, components)
    except ValidationError as e:
        raise QuotientGradingInvalid(f"induced grading on {name} is invalid: {e}", e.witness)
    logger.debug(f"Built quotient {name} of order {target.order}")
    quotient_graded = GradedNearRing(near_ring=target, grading=grading, name=name)
    return QuotientStructure(graded=quotient_graded, cosets=cosets, projection=projection, ideal=q)


def projection(graded: GradedNearRing, ideal) -> NearRingHom:
    return quotient(graded, ideal).projection


def component_preimage_mismatch(structure: QuotientStructure, source: GradedNearRing) -> Optional[Tuple[int, int, str]]:
    """Check how preimages of quotient ideals meet the components

    For every ideal J of N/Q and grade g, both
        {n in N_g : π(n) in J_g} == π⁻¹(J) ∩ N_g
        π⁻¹(J_g) == π⁻¹(J)_g + Q
    must hold. Returns (J, g, which) for the first failure.
    """
    hom = structure.projection
    target = structure.graded
    for j in ideal_masks(target.near_ring):
        whole = preimage(hom, j)
        for g in source.grades():
            j_g = component(target, j, g)
            if graded_preimage(hom, source, j_g, g) != whole & source.components[g]:
                return j, g, "homogeneous"
            if preimage(hom, j_g) != set_sum(source.near_ring, component(source, whole, g), structure.ideal):
                return j, g, "kernel-translate"
    return None


# --- Products ---
def direct_product(first: GradedNearRing, second: GradedNearRing, name: Optional[str] = None,
                   notes: str = "") -> GradedNearRing:
    """Componentwise product; element (a, b) has index a*|second| + b

    Raises:
        MonoidMismatch, OrderCapExceeded
    """
    require_same_monoid(first.monoid, second.monoid)
    n1, n2 = first.near_ring, second.near_ring
    order = n1.order * n2.order
    if order > MAX_ORDER:
        raise OrderCapExceeded(f"product order {order} exceeds the configured cap of {MAX_ORDER}")
    left = np.repeat(np.arange(n1.order), n2.order)
    right = np.tile(np.arange(n2.order), n1.order)

    def combine(table1, table2):
        return (table1[left[:, None], left[None, :]] * n2.order
                + table2[right[:, None], right[None, :]])

    labels = [f"({n1.label(a)},{n2.label(b)})" for a, b in zip(left.tolist(), right.tolist())]
    name = name or f"{first.name}x{second.name}"
    near_ring = validate_near_ring(order, combine(n1.add_table, n2.add_table),
                                   combine(n1.mul_table, n2.mul_table), labels=labels, name=name)
    components = [box_mask(first, second, c1, c2)
                  for c1, c2 in zip(first.components, second.components)]
    grading = validate_grading(near_ring, first.monoid, components)
    return GradedNearRing(near_ring=near_ring, grading=grading, name=name, notes=notes,
                          factors=(first, second))


def box_mask(first: GradedNearRing, second: GradedNearRing, left, right) -> int:
    """Mask of the subset left × right"""
    width = second.near_ring.order
    return masks.from_indices(a * width + b
                              for a in masks.members(mask_of(left))
                              for b in masks.members(mask_of(right)))


def product_ideal(product: GradedNearRing, left, right) -> Ideal:
    """I × J as a certified ideal of a componentwise product"""
    if product.factors is None:
        raise ValidationError(f"{product.name} is not a componentwise product")
    first, second = product.factors
    return certify(product.near_ring, box_mask(first, second, left, right))


def factor_projections(product: GradedNearRing, subset) -> Tuple[int, int]:
    """Images of a subset under the two coordinate projections"""
    first, second = product.factors
    width = second.near_ring.order
    members = masks.members(mask_of(subset))
    return (masks.from_indices(x // width for x in members),
            masks.from_indices(x % width for x in members))


def as_box(product: GradedNearRing, subset) -> Optional[Tuple[int, int]]:
    """(I, J) when the subset is exactly I × J"""
    first, second = product.factors
    left, right = factor_projections(product, subset)
    return (left, right) if box_mask(first, second, left, right) == mask_of(subset) else None


def product_projections(product: GradedNearRing) -> Tuple[NearRingHom, NearRingHom]:
    first, second = product.factors
    width = second.near_ring.order
    return (validate_hom(product.near_ring, first.near_ring, [x // width for x in product.near_ring.elements()]),
            validate_hom(product.near_ring, second.near_ring, [x % width for x in product.near_ring.elements()]))


def cyclic_reduction_hom(source: FiniteNearRing, target: FiniteNearRing) -> NearRingHom:
    """x mod m from Z_n onto Z_m for m dividing n"""
    return validate_hom(source, target, [x % target.order for x in source.elements()])
