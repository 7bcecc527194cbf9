"""Graded-prime and prime tests for ideals of graded near-rings.

A proper graded ideal P is graded prime when, for all ideals A, B and grades
g, h, A_g B_h ⊆ P_gh forces A_g ⊆ P_g or B_h ⊆ P_h. Besides the definition
this module carries several equivalent encodings so they can be cross-checked
against each other; each returns a PrimalityReport whose witness can be
replayed independently with `replay_witness`.
"""
import itertools
import logging
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable, Dict, List, Optional, Tuple

from .errors import NotAnIdeal, NotGraded, NotProper, UnknownTheoremId
from .grading import GradedNearRing, component, graded_ideal_masks, is_graded_ideal
from .ideals import (
    IdealScope, generated_mask, ideal_masks, ideal_witness, is_ideal, mask_of, principal_mask,
    set_power, set_product,
)
from .structures import FiniteNearRing
from . import masks

# Set up logging
logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class PrimalityReport:
    """Verdict of one checker on one ideal

    Attributes:
        ideal: Mask of the ideal tested.
        verdict: True when the checker found no violation.
        checker: Registry id of the checker.
        witness: Named indices of the first violation, None when verdict is True.
    """
    ideal: int
    verdict: bool
    checker: str
    witness: Optional[Dict[str, int]] = field(default=None, compare=False)

    def __bool__(self):
        return self.verdict


def _report(checker: str, ideal: int, witness: Optional[Dict[str, int]]) -> PrimalityReport:
    return PrimalityReport(ideal=ideal, verdict=witness is None, checker=checker, witness=witness)


def require_proper_graded(graded: GradedNearRing, ideal) -> int:
    """Admissibility check shared by every graded-prime test

    Raises:
        NotProper: the ideal is the whole carrier.
        NotGraded: the ideal is not an ideal, or not graded.
    """
    ideal = mask_of(ideal)
    near_ring = graded.near_ring
    if ideal == near_ring.full_mask:
        raise NotProper(f"{near_ring.format(ideal)} is the whole carrier")
    if not is_ideal(near_ring, ideal) or not is_graded_ideal(graded, ideal):
        raise NotGraded(f"{near_ring.format(ideal)} is not a graded ideal")
    return ideal


def ideals_in_scope(graded: GradedNearRing, scope: IdealScope = IdealScope.ALL) -> List[int]:
    """Ideals the quantifiers of the graded tests range over"""
    if IdealScope(scope) is IdealScope.GRADED:
        return graded_ideal_masks(graded)
    return ideal_masks(graded.near_ring)


def _grade_pairs(graded: GradedNearRing):
    return itertools.product(graded.grades(), graded.grades())


# --- Checkers ---
def is_graded_prime_def(graded: GradedNearRing, ideal, scope: IdealScope = IdealScope.ALL) -> PrimalityReport:
    """The definition, looping grades g, h then B then A in canonical order"""
    p = require_proper_graded(graded, ideal)
    near_ring = graded.near_ring
    candidates = ideals_in_scope(graded, scope)
    for g, h in _grade_pairs(graded):
        p_g, p_h = component(graded, p, g), component(graded, p, h)
        p_gh = component(graded, p, graded.monoid.op(g, h))
        for b in candidates:
            b_h = component(graded, b, h)
            if masks.is_subset(b_h, p_h):
                continue
            for a in candidates:
                a_g = component(graded, a, g)
                if masks.is_subset(a_g, p_g):
                    continue
                if masks.is_subset(set_product(near_ring, a_g, b_h), p_gh):
                    return _report("def", p, {"A": a, "B": b, "g": g, "h": h})
    return _report("def", p, None)


def is_graded_prime_homog(graded: GradedNearRing, ideal, scope: IdealScope = IdealScope.ALL) -> PrimalityReport:
    """Homogeneous-element form: ⟨i⟩_g ⟨j⟩_h ⊆ P_gh forces i in P or j in P"""
    p = require_proper_graded(graded, ideal)
    near_ring = graded.near_ring
    for g, h in _grade_pairs(graded):
        p_gh = component(graded, p, graded.monoid.op(g, h))
        outside_g = masks.members(graded.components[g] & ~p)
        outside_h = masks.members(graded.components[h] & ~p)
        for i in outside_g:
            left = component(graded, principal_mask(near_ring, i), g)
            for j in outside_h:
                right = component(graded, principal_mask(near_ring, j), h)
                if masks.is_subset(set_product(near_ring, left, right), p_gh):
                    return _report("homog", p, {"i": i, "j": j, "g": g, "h": h})
    return _report("homog", p, None)


def thm28_condition2(graded: GradedNearRing, ideal, scope: IdealScope = IdealScope.ALL) -> PrimalityReport:
    """Strict-containment form: P_g ⊊ A_g and P_h ⊊ B_h forbid A_g B_h ⊆ P_gh"""
    p = require_proper_graded(graded, ideal)
    near_ring = graded.near_ring
    candidates = ideals_in_scope(graded, scope)
    for g, h in _grade_pairs(graded):
        p_g, p_h = component(graded, p, g), component(graded, p, h)
        p_gh = component(graded, p, graded.monoid.op(g, h))
        for b in candidates:
            b_h = component(graded, b, h)
            if not masks.is_proper_subset(p_h, b_h):
                continue
            for a in candidates:
                a_g = component(graded, a, g)
                if not masks.is_proper_subset(p_g, a_g):
                    continue
                if masks.is_subset(set_product(near_ring, a_g, b_h), p_gh):
                    return _report("t28c2", p, {"A": a, "B": b, "g": g, "h": h})
    return _report("t28c2", p, None)


def thm28_condition3(graded: GradedNearRing, ideal, scope: IdealScope = IdealScope.ALL) -> PrimalityReport:
    """Contrapositive form: A_g ⊄ P_g and B_h ⊄ P_h forbid A_g B_h ⊆ P_gh"""
    p = require_proper_graded(graded, ideal)
    near_ring = graded.near_ring
    candidates = ideals_in_scope(graded, scope)
    for g, h in _grade_pairs(graded):
        p_g, p_h = component(graded, p, g), component(graded, p, h)
        p_gh = component(graded, p, graded.monoid.op(g, h))
        outside_b = [b for b in candidates if not masks.is_subset(component(graded, b, h), p_h)]
        outside_a = [a for a in candidates if not masks.is_subset(component(graded, a, g), p_g)]
        for b in outside_b:
            for a in outside_a:
                product = set_product(near_ring, component(graded, a, g), component(graded, b, h))
                if masks.is_subset(product, p_gh):
                    return _report("t28c3", p, {"A": a, "B": b, "g": g, "h": h})
    return _report("t28c3", p, None)


def quotient_nonzero_product_check(graded: GradedNearRing, ideal,
                                   scope: IdealScope = IdealScope.ALL) -> PrimalityReport:
    """In N/P, images of A_g and B_h both nonzero must have a nonzero product"""
    from .constructions import image, quotient

    p = require_proper_graded(graded, ideal)
    structure = quotient(graded, p)
    target = structure.graded.near_ring
    projection = structure.projection
    zero_bar = target.zero_mask
    candidates = ideals_in_scope(graded, scope)
    for g, h in _grade_pairs(graded):
        for b in candidates:
            b_bar = image(projection, component(graded, b, h))
            if b_bar == zero_bar:
                continue
            for a in candidates:
                a_bar = image(projection, component(graded, a, g))
                if a_bar == zero_bar:
                    continue
                if set_product(target, a_bar, b_bar) == zero_bar:
                    return _report("p213", p, {"A": a, "B": b, "g": g, "h": h})
    return _report("p213", p, None)


def _generated_component(graded: GradedNearRing, b: int, c: int, g: int) -> int:
    """(⟨b⟩ + ⟨c⟩)_g"""
    near_ring = graded.near_ring
    return component(graded, generated_mask(near_ring, masks.single(b) | masks.single(c)), g)


def prop29_colon(graded: GradedNearRing, ideal, x: int, y: int, h: int,
                 g: Optional[int] = None) -> int:
    """(P_hg : (⟨x⟩ + ⟨y⟩)_g)_h = {t in N_h : t S ⊆ P_hg}

    `g` is the grade of x and y; it is inferred from a nonzero argument when
    omitted and defaults to the monoid identity when both are zero.

    Raises:
        NotGraded: x or y lies outside N_g.
    """
    p = require_proper_graded(graded, ideal)
    near_ring = graded.near_ring
    if g is None:
        g = _infer_grade(graded, x, y)
    if not 0 <= g < graded.monoid.order:
        raise NotGraded(f"{g} is not a grade of {graded.name}")
    for element in (x, y):
        if not masks.get_bit(graded.components[g], element):
            raise NotGraded(f"element {element} is not homogeneous of grade {g}")
    s = _generated_component(graded, x, y, g)
    target = component(graded, p, graded.monoid.op(h, g))
    s_members = masks.members(s)
    colon = 0
    for t in masks.members(graded.components[h]):
        if all(masks.get_bit(target, int(near_ring.mul_table[t, v])) for v in s_members):
            colon |= masks.single(t)
    return colon


def _infer_grade(graded: GradedNearRing, x: int, y: int) -> int:
    for element in (x, y):
        if element != graded.near_ring.zero:
            for g in graded.grades():
                if masks.get_bit(graded.components[g], element):
                    return g
    return graded.monoid.identity


def prop29_condition1(graded: GradedNearRing, ideal, scope: IdealScope = IdealScope.ALL) -> PrimalityReport:
    """a (⟨b⟩+⟨c⟩)_g ⊆ P_hg forces a in P or both b, c in P"""
    p = require_proper_graded(graded, ideal)
    near_ring = graded.near_ring
    for h, g in _grade_pairs(graded):
        target = component(graded, p, graded.monoid.op(h, g))
        grade_members = masks.members(graded.components[g])
        for b, c in itertools.combinations_with_replacement(grade_members, 2):
            if masks.get_bit(p, b) and masks.get_bit(p, c):
                continue
            s = _generated_component(graded, b, c, g)
            for a in masks.members(graded.components[h] & ~p):
                if masks.is_subset(set_product(near_ring, masks.single(a), s), target):
                    return _report("p29", p, {"a": a, "b": b, "c": c, "g": g, "h": h})
    return _report("p29", p, None)


def prop29_condition2(graded: GradedNearRing, ideal, scope: IdealScope = IdealScope.ALL) -> PrimalityReport:
    """The colon of P by (⟨x⟩+⟨y⟩)_g is exactly P_h whenever x is outside P"""
    p = require_proper_graded(graded, ideal)
    for g, h in _grade_pairs(graded):
        p_h = component(graded, p, h)
        for x in masks.members(graded.components[g] & ~p):
            for y in masks.members(graded.components[g]):
                if prop29_colon(graded, p, x, y, h, g) != p_h:
                    return _report("p29c2", p, {"x": x, "y": y, "g": g, "h": h})
    return _report("p29c2", p, None)


CHECKERS: Dict[str, Callable[..., PrimalityReport]] = {
    "def": is_graded_prime_def,
    "homog": is_graded_prime_homog,
    "t28c2": thm28_condition2,
    "t28c3": thm28_condition3,
    "p29": prop29_condition1,
    "p29c2": prop29_condition2,
    "p213": quotient_nonzero_product_check,
}


def get_checker(checker_id: str) -> Callable[..., PrimalityReport]:
    try:
        return CHECKERS[checker_id]
    except KeyError:
        raise UnknownTheoremId(f"unknown checker '{checker_id}' (known: {', '.join(CHECKERS)})")


def run_checker(graded: GradedNearRing, ideal, checker_id: str = "def",
                scope: IdealScope = IdealScope.ALL) -> PrimalityReport:
    return get_checker(checker_id)(graded, ideal, scope)


def is_graded_prime(graded: GradedNearRing, ideal, scope: IdealScope = IdealScope.ALL) -> bool:
    return is_graded_prime_def(graded, ideal, scope).verdict


# --- Ungraded primes ---
def is_prime_ideal(near_ring: FiniteNearRing, ideal) -> PrimalityReport:
    """Classical primeness: AB ⊆ P forces A ⊆ P or B ⊆ P"""
    p = mask_of(ideal)
    if p == near_ring.full_mask:
        raise NotProper(f"{near_ring.format(p)} is the whole carrier")
    witness = ideal_witness(near_ring, p)
    if witness is not None:
        raise NotAnIdeal(f"{near_ring.format(p)} is not an ideal", witness)
    candidates = [m for m in ideal_masks(near_ring) if not masks.is_subset(m, p)]
    for b in candidates:
        for a in candidates:
            if masks.is_subset(set_product(near_ring, a, b), p):
                return _report("prime", p, {"A": a, "B": b})
    return _report("prime", p, None)


@lru_cache(maxsize=256)
def _prime_masks(near_ring: FiniteNearRing) -> Tuple[int, ...]:
    return tuple(m for m in ideal_masks(near_ring)
                 if m != near_ring.full_mask and is_prime_ideal(near_ring, m).verdict)


def prime_ideals(near_ring: FiniteNearRing) -> List[int]:
    return list(_prime_masks(near_ring))


@lru_cache(maxsize=256)
def _graded_prime_masks(graded: GradedNearRing, scope: IdealScope) -> Tuple[int, ...]:
    found = tuple(m for m in graded_ideal_masks(graded)
                  if m != graded.near_ring.full_mask and is_graded_prime_def(graded, m, scope).verdict)
    logger.info(f"{graded.name}: {len(found)} graded primes ({IdealScope(scope).value} scope)")
    return found


def graded_primes(graded: GradedNearRing, scope: IdealScope = IdealScope.ALL) -> List[int]:
    """Masks of all graded prime ideals in canonical order"""
    return list(_graded_prime_masks(graded, IdealScope(scope)))


def proper_graded_ideals(graded: GradedNearRing) -> List[int]:
    return [m for m in graded_ideal_masks(graded) if m != graded.near_ring.full_mask]


# --- Powers ---
def power_descent_violation(graded: GradedNearRing, ideal, subset, exponent: int) -> Optional[Dict[str, int]]:
    """Where (J_g)^n ⊆ P_{g^n} or J^n ⊆ P holds without J_g ⊆ P_g or J ⊆ P"""
    p = mask_of(ideal)
    j = mask_of(subset)
    near_ring = graded.near_ring
    for g in graded.grades():
        j_g = component(graded, j, g)
        target = component(graded, p, graded.monoid.power(g, exponent))
        if masks.is_subset(set_power(near_ring, j_g, exponent), target) and not masks.is_subset(j_g, p):
            return {"g": g, "n": exponent}
    if masks.is_subset(set_power(near_ring, j, exponent), p) and not masks.is_subset(j, p):
        return {"n": exponent}
    return None


def power_descends(graded: GradedNearRing, ideal, subset, exponent: int) -> bool:
    """Componentwise and whole-ideal power descent into P"""
    return power_descent_violation(graded, ideal, subset, exponent) is None


# --- Witness replay ---
def _replay_pair(graded: GradedNearRing, p: int, w: Dict[str, int], strict: bool) -> bool:
    near_ring = graded.near_ring
    a, b, g, h = w["A"], w["B"], w["g"], w["h"]
    if not (is_ideal(near_ring, a) and is_ideal(near_ring, b)):
        return False
    a_g, b_h = component(graded, a, g), component(graded, b, h)
    p_g, p_h = component(graded, p, g), component(graded, p, h)
    if strict:
        outside = masks.is_proper_subset(p_g, a_g) and masks.is_proper_subset(p_h, b_h)
    else:
        outside = not masks.is_subset(a_g, p_g) and not masks.is_subset(b_h, p_h)
    product = set_product(near_ring, a_g, b_h)
    return outside and masks.is_subset(product, component(graded, p, graded.monoid.op(g, h)))


def replay_witness(graded: GradedNearRing, report: PrimalityReport) -> bool:
    """Independently confirm that a negative report's witness violates primeness"""
    if report.verdict or report.witness is None:
        return False
    near_ring = graded.near_ring
    p, w = report.ideal, report.witness
    if report.checker in ("def", "t28c3"):
        return _replay_pair(graded, p, w, strict=False)
    if report.checker == "t28c2":
        return _replay_pair(graded, p, w, strict=True)
    if report.checker == "p213":
        # Nonzero modulo P means not inside P
        return _replay_pair(graded, p, w, strict=False)
    if report.checker == "homog":
        i, j, g, h = w["i"], w["j"], w["g"], w["h"]
        left = component(graded, principal_mask(near_ring, i), g)
        right = component(graded, principal_mask(near_ring, j), h)
        return (masks.get_bit(graded.components[g], i) and masks.get_bit(graded.components[h], j)
                and not masks.get_bit(p, i) and not masks.get_bit(p, j)
                and masks.is_subset(set_product(near_ring, left, right),
                                    component(graded, p, graded.monoid.op(g, h))))
    if report.checker == "p29":
        a, b, c, g, h = w["a"], w["b"], w["c"], w["g"], w["h"]
        s = _generated_component(graded, b, c, g)
        target = component(graded, p, graded.monoid.op(h, g))
        return (masks.get_bit(graded.components[h], a) and not masks.get_bit(p, a)
                and not (masks.get_bit(p, b) and masks.get_bit(p, c))
                and masks.is_subset(set_product(near_ring, masks.single(a), s), target))
    if report.checker == "p29c2":
        x, y, g, h = w["x"], w["y"], w["g"], w["h"]
        return (not masks.get_bit(p, x)
                and prop29_colon(graded, p, x, y, h, g) != component(graded, p, h))
    if report.checker == "prime":
        a, b = w["A"], w["B"]
        return (is_ideal(near_ring, a) and is_ideal(near_ring, b)
                and not masks.is_subset(a, p) and not masks.is_subset(b, p)
                and masks.is_subset(set_product(near_ring, a, b), p))
    raise UnknownTheoremId(f"no replay for checker '{report.checker}'")
