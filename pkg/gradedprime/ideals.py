"""Normal subgroups, ideals and ideal arithmetic for finite near-rings.

An ideal I of N is a normal subgroup of (N, +) with
    IN ⊆ I                      (i*n in I)
    n(m+i) - nm in I            for all n, m in N and i in I.
Subsets are bit masks (see masks.py); Ideal wraps a certified mask together
with its carrier.
"""
import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from typing import FrozenSet, Iterable, List, Optional, Tuple

import numpy as np

from .config import BUDGET_WARNING_RATIO, resolve_budget, resolve_workers
from .errors import EnumerationBudgetExceeded, NotAnIdeal
from .structures import FiniteNearRing, first_violation
from . import masks

# Set up logging
logger = logging.getLogger(__name__)

CLOSURE_RULES: FrozenSet[str] = frozenset({"conjugate", "right", "left"})


class IdealScope(str, Enum):
    """Which ideals the primality quantifiers range over"""
    ALL = "all"
    GRADED = "graded"


@dataclass(frozen=True)
class Ideal:
    """A certified ideal of `carrier`"""
    carrier: FiniteNearRing
    mask: int

    @property
    def members(self) -> List[int]:
        return masks.members(self.mask)

    @property
    def size(self) -> int:
        return masks.size(self.mask)

    def __contains__(self, element: int) -> bool:
        return masks.get_bit(self.mask, element)

    def is_proper(self) -> bool:
        return self.mask != self.carrier.full_mask

    def __str__(self):
        return self.carrier.format(self.mask)


def mask_of(subset) -> int:
    """Accept an Ideal or a raw mask"""
    return subset.mask if isinstance(subset, Ideal) else int(subset)


# --- Subgroups ---
def subgroup_closure(near_ring: FiniteNearRing, subset: int) -> int:
    """Additive subgroup generated by `subset` (always contains zero)"""
    generators = masks.members(subset)
    closure = near_ring.zero_mask
    queue = [near_ring.zero]
    add = near_ring.add_table
    while queue:
        x = queue.pop()
        for g in generators:
            y = int(add[x, g])
            if not (closure >> y) & 1:
                closure |= 1 << y
                queue.append(y)
    return closure


def set_sum(near_ring: FiniteNearRing, first: int, second: int) -> int:
    """{a + b : a in first, b in second}"""
    a = masks.member_array(mask_of(first))
    b = masks.member_array(mask_of(second))
    if a.size == 0 or b.size == 0:
        return 0
    return masks.from_array(near_ring.add_table[np.ix_(a, b)])


def normal_subgroup_witness(near_ring: FiniteNearRing, subset: int) -> Optional[Tuple]:
    """Why `subset` is not a normal subgroup, or None if it is"""
    subset = mask_of(subset)
    if not masks.get_bit(subset, near_ring.zero):
        return ("zero", near_ring.zero)
    inside = masks.indicator(subset, near_ring.order)
    idx = masks.member_array(subset)
    bad = first_violation(~inside[near_ring.add_table[np.ix_(idx, idx)]])
    if bad is not None:
        return ("add", int(idx[bad[0]]), int(idx[bad[1]]))
    bad = first_violation(~inside[near_ring.neg_table[idx]])
    if bad is not None:
        return ("neg", int(idx[bad[0]]))
    conjugates = near_ring.add_table[near_ring.add_table[:, idx], near_ring.neg_table[:, None]]
    bad = first_violation(~inside[conjugates])
    if bad is not None:
        return ("conjugate", bad[0], int(idx[bad[1]]))
    return None


def is_normal_subgroup(near_ring: FiniteNearRing, subset: int) -> bool:
    return normal_subgroup_witness(near_ring, subset) is None


# --- Ideal tests ---
def _right_images(near_ring: FiniteNearRing, idx: np.ndarray) -> np.ndarray:
    """[k, n] = i_k * n"""
    return near_ring.mul_table[idx, :]


def _left_images(near_ring: FiniteNearRing, idx: np.ndarray) -> np.ndarray:
    """[n, m, k] = n(m + i_k) - nm"""
    mul, add = near_ring.mul_table, near_ring.add_table
    shifted = mul[:, add[:, idx]]
    products = near_ring.neg_table[mul]
    return add[shifted, products[:, :, None]]


def _conjugate_images(near_ring: FiniteNearRing, idx: np.ndarray) -> np.ndarray:
    """[n, k] = n + i_k - n"""
    add = near_ring.add_table
    return add[add[:, idx], near_ring.neg_table[:, None]]


def ideal_witness(near_ring: FiniteNearRing, subset: int) -> Optional[Tuple]:
    """Why `subset` is not an ideal, or None if it is"""
    subset = mask_of(subset)
    witness = normal_subgroup_witness(near_ring, subset)
    if witness is not None:
        return witness
    inside = masks.indicator(subset, near_ring.order)
    idx = masks.member_array(subset)
    bad = first_violation(~inside[_right_images(near_ring, idx)])
    if bad is not None:
        return ("right", int(idx[bad[0]]), bad[1])
    bad = first_violation(~inside[_left_images(near_ring, idx)])
    if bad is not None:
        return ("left", bad[0], bad[1], int(idx[bad[2]]))
    return None


def is_ideal(near_ring: FiniteNearRing, subset: int) -> bool:
    return ideal_witness(near_ring, subset) is None


def certify(near_ring: FiniteNearRing, subset: int) -> Ideal:
    """Wrap a mask as an Ideal, raising NotAnIdeal otherwise"""
    subset = mask_of(subset)
    witness = ideal_witness(near_ring, subset)
    if witness is not None:
        raise NotAnIdeal(f"{near_ring.format(subset)} is not an ideal", witness)
    return Ideal(near_ring, subset)


# --- Enumeration ---
def enumerate_additive_subgroups(near_ring: FiniteNearRing, budget: Optional[int] = None) -> List[int]:
    """All additive subgroups, grown from {0} one generator at a time"""
    budget = resolve_budget(budget)
    start = near_ring.zero_mask
    seen = {start}
    frontier = [start]
    warned = False
    while frontier:
        next_frontier = []
        for subgroup in frontier:
            for x in near_ring.elements():
                if masks.get_bit(subgroup, x):
                    continue
                grown = subgroup_closure(near_ring, subgroup | (1 << x))
                if grown in seen:
                    continue
                seen.add(grown)
                next_frontier.append(grown)
                if len(seen) > budget:
                    raise EnumerationBudgetExceeded(
                        f"more than {budget} additive subgroups in {near_ring.name or 'carrier'}")
                if not warned and len(seen) > BUDGET_WARNING_RATIO * budget:
                    logger.warning(f"Subgroup enumeration of {near_ring.name or 'carrier'} is near its budget ({budget})")
                    warned = True
        frontier = next_frontier
    return masks.canonical_order(seen)


def _filter(near_ring: FiniteNearRing, candidates: List[int], test, workers: Optional[int]) -> List[int]:
    workers = resolve_workers(workers)
    if workers == 1 or len(candidates) < 2:
        verdicts = [test(near_ring, c) for c in candidates]
    else:
        with ThreadPoolExecutor(max_workers=workers) as executor:
            verdicts = list(executor.map(lambda c: test(near_ring, c), candidates))
    return [c for c, keep in zip(candidates, verdicts) if keep]


@lru_cache(maxsize=256)
def _normal_subgroup_masks(near_ring: FiniteNearRing, budget: int, workers: int) -> Tuple[int, ...]:
    candidates = enumerate_additive_subgroups(near_ring, budget)
    return tuple(_filter(near_ring, candidates, is_normal_subgroup, workers))


@lru_cache(maxsize=256)
def _ideal_masks(near_ring: FiniteNearRing, budget: int, workers: int) -> Tuple[int, ...]:
    candidates = list(_normal_subgroup_masks(near_ring, budget, workers))
    found = tuple(_filter(near_ring, candidates, is_ideal, workers))
    logger.info(f"{near_ring.name or 'carrier'}: {len(candidates)} normal subgroups, {len(found)} ideals")
    return found


def enumerate_normal_subgroups(near_ring: FiniteNearRing, budget: Optional[int] = None,
                               workers: Optional[int] = None) -> List[int]:
    """Masks of all normal subgroups of (N, +) in canonical order"""
    return list(_normal_subgroup_masks(near_ring, resolve_budget(budget), resolve_workers(workers)))


def ideal_masks(near_ring: FiniteNearRing, budget: Optional[int] = None,
                workers: Optional[int] = None) -> List[int]:
    """Masks of all ideals in canonical order (size, then members)"""
    return list(_ideal_masks(near_ring, resolve_budget(budget), resolve_workers(workers)))


def enumerate_ideals(near_ring: FiniteNearRing, budget: Optional[int] = None,
                     workers: Optional[int] = None) -> List[Ideal]:
    """Every ideal of `near_ring`, each exactly once, in canonical order

    Raises:
        EnumerationBudgetExceeded: more additive subgroups than `budget`.
    """
    return [Ideal(near_ring, m) for m in ideal_masks(near_ring, budget, workers)]


def is_maximal_ideal(near_ring: FiniteNearRing, subset: int, budget: Optional[int] = None) -> bool:
    """Proper ideal with no proper ideal strictly above it"""
    from .errors import NotProper

    subset = mask_of(subset)
    if subset == near_ring.full_mask:
        raise NotProper(f"{near_ring.format(subset)} is the whole carrier")
    if not is_ideal(near_ring, subset):
        return False
    return not any(masks.is_proper_subset(subset, other) and other != near_ring.full_mask
                   for other in ideal_masks(near_ring, budget))


def maximal_ideals(near_ring: FiniteNearRing, budget: Optional[int] = None) -> List[int]:
    proper = [m for m in ideal_masks(near_ring, budget) if m != near_ring.full_mask]
    return [m for m in proper if not any(masks.is_proper_subset(m, other) for other in proper)]


# --- Generation ---
@lru_cache(maxsize=4096)
def _generated_mask(near_ring: FiniteNearRing, subset: int, rules: FrozenSet[str]) -> int:
    current = subgroup_closure(near_ring, subset)
    while True:
        idx = masks.member_array(current)
        images = current
        if "conjugate" in rules:
            images |= masks.from_array(_conjugate_images(near_ring, idx))
        if "right" in rules:
            images |= masks.from_array(_right_images(near_ring, idx))
        if "left" in rules:
            images |= masks.from_array(_left_images(near_ring, idx))
        grown = subgroup_closure(near_ring, images)
        if grown == current:
            return current
        current = grown


def generated_mask(near_ring: FiniteNearRing, subset: int,
                   rules: Iterable[str] = CLOSURE_RULES) -> int:
    """Least subset containing `subset` closed under the additive group and `rules`"""
    return _generated_mask(near_ring, mask_of(subset), frozenset(rules))


def ideal_generated_by(near_ring: FiniteNearRing, subset: int) -> Ideal:
    """Smallest ideal containing `subset`"""
    return Ideal(near_ring, generated_mask(near_ring, subset))


def principal_mask(near_ring: FiniteNearRing, element: int) -> int:
    return generated_mask(near_ring, masks.single(element))


# --- Ideal arithmetic ---
@lru_cache(maxsize=65536)
def _set_product(near_ring: FiniteNearRing, first: int, second: int) -> int:
    a = masks.member_array(first)
    b = masks.member_array(second)
    if a.size == 0 or b.size == 0:
        return 0
    return masks.from_array(near_ring.mul_table[np.ix_(a, b)])


def set_product(near_ring: FiniteNearRing, first: int, second: int) -> int:
    """{a * b : a in first, b in second}"""
    return _set_product(near_ring, mask_of(first), mask_of(second))


def set_power(near_ring: FiniteNearRing, subset: int, exponent: int) -> int:
    """Left-associated set product of `exponent` copies of `subset`"""
    if exponent < 1:
        raise ValueError("exponent must be at least 1")
    subset = mask_of(subset)
    result = subset
    for _ in range(exponent - 1):
        result = set_product(near_ring, result, subset)
    return result


def ideal_sum(first: Ideal, second: Ideal) -> Ideal:
    near_ring = first.carrier
    return ideal_generated_by(near_ring, first.mask | second.mask)


def ideal_product(first: Ideal, second: Ideal) -> Ideal:
    """Ideal generated by the set product"""
    near_ring = first.carrier
    return ideal_generated_by(near_ring, set_product(near_ring, first.mask, second.mask))


def intersection(first: Ideal, second: Ideal) -> Ideal:
    return Ideal(first.carrier, first.mask & second.mask)
