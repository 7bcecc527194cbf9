"""Certified finite monoids and near-rings.

Structures are only ever produced by the validators in this module, so any
FiniteMonoid or FiniteNearRing in hand has already passed its axioms.
Tables are read-only numpy arrays indexed by element.
"""
import logging
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from .config import MAX_ORDER
from .errors import (
    AddNotGroup, BadIdentity, MalformedTable, MulNotAssociative,
    NotAssociative, NotRightDistributive, OrderCapExceeded, ValidationError,
)
from . import masks

# Set up logging
logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class FiniteMonoid:
    """A finite monoid on {0..order-1}

    Attributes:
        order: Number of elements.
        op_table: op_table[a, b] is a*b.
        identity: Two-sided identity element.
        name: Short name used in documents.
    """
    order: int
    op_table: np.ndarray
    identity: int
    name: str = ""

    def op(self, a: int, b: int) -> int:
        return int(self.op_table[a, b])

    def power(self, g: int, n: int) -> int:
        result = self.identity
        for _ in range(n):
            result = self.op(result, g)
        return result

    def elements(self) -> range:
        return range(self.order)

    def same_as(self, other: "FiniteMonoid") -> bool:
        return (self.order == other.order and self.identity == other.identity
                and np.array_equal(self.op_table, other.op_table))


@dataclass(frozen=True, eq=False)
class FiniteNearRing:
    """A finite right near-ring on {0..order-1}

    Addition is a (possibly non-abelian) group, multiplication is a
    semigroup and (a+b)c = ac+bc holds for all a, b, c.

    Attributes:
        order: Number of elements.
        add_table: add_table[a, b] is a+b.
        mul_table: mul_table[a, b] is ab.
        zero: Additive identity.
        neg_table: neg_table[a] is -a.
        one: Two-sided multiplicative identity, or None.
        labels: Optional display names, one per element.
        name: Short name used in documents.
    """
    order: int
    add_table: np.ndarray
    mul_table: np.ndarray
    zero: int
    neg_table: np.ndarray
    one: Optional[int] = None
    labels: Optional[Tuple[str, ...]] = None
    name: str = ""

    def add(self, a: int, b: int) -> int:
        return int(self.add_table[a, b])

    def mul(self, a: int, b: int) -> int:
        return int(self.mul_table[a, b])

    def neg(self, a: int) -> int:
        return int(self.neg_table[a])

    def sub(self, a: int, b: int) -> int:
        return int(self.add_table[a, self.neg_table[b]])

    def sum_over(self, elements: Sequence[int]) -> int:
        """Left-to-right sum, zero for an empty sequence"""
        total = self.zero
        for element in elements:
            total = int(self.add_table[total, element])
        return total

    def elements(self) -> range:
        return range(self.order)

    @property
    def full_mask(self) -> int:
        return masks.full(self.order)

    @property
    def zero_mask(self) -> int:
        return masks.single(self.zero)

    def label(self, index: int) -> str:
        return self.labels[index] if self.labels else str(index)

    def format(self, mask: int) -> str:
        return masks.format_mask(mask, self.labels)


# --- Table helpers ---
def first_violation(violations: np.ndarray) -> Optional[Tuple[int, ...]]:
    """Lexicographically first index where a boolean array is True"""
    hits = np.argwhere(violations)
    if hits.size == 0:
        return None
    return tuple(int(v) for v in hits[0])


def associativity_violation(table: np.ndarray) -> Optional[Tuple[int, int, int]]:
    """First (a, b, c) with (ab)c != a(bc)"""
    n = table.shape[0]
    left = table[table, :]
    right = table[np.arange(n)[:, None, None], table[None, :, :]]
    return first_violation(left != right)


def _normalize_table(order: int, table, name: str) -> np.ndarray:
    try:
        array = np.asarray(table, dtype=np.int64)
    except (TypeError, ValueError) as e:
        raise MalformedTable(f"{name} table is not a rectangular integer table: {e}")
    if array.shape != (order, order):
        raise MalformedTable(f"{name} table has shape {array.shape}, expected ({order}, {order})")
    if order and (array.min() < 0 or array.max() >= order):
        bad = first_violation((array < 0) | (array >= order))
        raise MalformedTable(f"{name} table has entries outside 0..{order - 1}", bad)
    array = array.copy()
    array.setflags(write=False)
    return array


def _check_order(order: int) -> int:
    if not isinstance(order, (int, np.integer)) or isinstance(order, bool) or order < 1:
        raise MalformedTable(f"order must be a positive integer, got {order!r}")
    if order > MAX_ORDER:
        raise OrderCapExceeded(f"order {order} exceeds the configured cap of {MAX_ORDER}")
    return int(order)


def _two_sided_identities(table: np.ndarray) -> List[int]:
    n = table.shape[0]
    everything = np.arange(n)
    return [e for e in range(n)
            if np.array_equal(table[e, :], everything) and np.array_equal(table[:, e], everything)]


# --- Validators ---
def validate_monoid(order: int, op_table, identity: int, name: str = "") -> FiniteMonoid:
    """Certify a monoid table

    Raises:
        MalformedTable, BadIdentity, NotAssociative
    """
    order = _check_order(order)
    table = _normalize_table(order, op_table, "monoid")
    if not isinstance(identity, (int, np.integer)) or not 0 <= identity < order:
        raise MalformedTable(f"identity {identity!r} is not an element", (identity,))
    everything = np.arange(order)
    bad = first_violation((table[identity, :] != everything) | (table[:, identity] != everything))
    if bad is not None:
        raise BadIdentity(f"{identity} is not a two-sided identity", bad)
    bad = associativity_violation(table)
    if bad is not None:
        raise NotAssociative("monoid operation is not associative", bad)
    logger.debug(f"Certified monoid {name or '?'} of order {order}")
    return FiniteMonoid(order=order, op_table=table, identity=int(identity), name=name)


def validate_near_ring(order: int, add_table, mul_table,
                       labels: Optional[Sequence[str]] = None, name: str = "") -> FiniteNearRing:
    """Certify a right near-ring from its Cayley tables

    Checks, in order: table shape, additive identity, additive associativity,
    additive inverses, multiplicative associativity, right distributivity.
    Witnesses are the lexicographically first offending tuple.

    Raises:
        MalformedTable, AddNotGroup, MulNotAssociative, NotRightDistributive
    """
    order = _check_order(order)
    add = _normalize_table(order, add_table, "add")
    mul = _normalize_table(order, mul_table, "mul")
    if labels is not None:
        labels = tuple(str(label) for label in labels)
        if len(labels) != order:
            raise MalformedTable(f"expected {order} labels, got {len(labels)}")

    zeros = _two_sided_identities(add)
    if not zeros:
        raise AddNotGroup("addition has no identity element")
    zero = zeros[0]

    bad = associativity_violation(add)
    if bad is not None:
        raise AddNotGroup("addition is not associative", bad)

    neg = np.full(order, -1, dtype=np.int64)
    for a in range(order):
        inverses = np.nonzero((add[a, :] == zero) & (add[:, a] == zero))[0]
        if inverses.size == 0:
            raise AddNotGroup(f"element {a} has no additive inverse", (a,))
        neg[a] = inverses[0]
    neg.setflags(write=False)

    bad = associativity_violation(mul)
    if bad is not None:
        raise MulNotAssociative("multiplication is not associative", bad)

    bad = right_distributivity_violation(add, mul)
    if bad is not None:
        raise NotRightDistributive("(a+b)c != ac+bc", bad)

    # Right distributivity forces 0*x = 0
    if np.any(mul[zero, :] != zero):
        raise ValidationError("0x != 0", (int(np.argmax(mul[zero, :] != zero)),))

    ones = _two_sided_identities(mul)
    one = ones[0] if ones else None
    logger.debug(f"Certified near-ring {name or '?'} of order {order} (unity: {one})")
    return FiniteNearRing(order=order, add_table=add, mul_table=mul, zero=int(zero),
                          neg_table=neg, one=one, labels=labels, name=name)


# --- Diagnostics ---
def right_distributivity_violation(add: np.ndarray, mul: np.ndarray) -> Optional[Tuple[int, int, int]]:
    left = mul[add, :]
    right = add[mul[:, None, :], mul[None, :, :]]
    return first_violation(left != right)


def left_distributivity_witness(near_ring: FiniteNearRing) -> Optional[Tuple[int, int, int]]:
    """First (a, b, c) with a(b+c) != ab+ac, None when left distributive"""
    add, mul = near_ring.add_table, near_ring.mul_table
    n = near_ring.order
    left = mul[np.arange(n)[:, None, None], add[None, :, :]]
    right = add[mul[:, :, None], mul[:, None, :]]
    return first_violation(left != right)


def is_abelian(near_ring: FiniteNearRing) -> bool:
    return bool(np.array_equal(near_ring.add_table, near_ring.add_table.T))


def is_ring(near_ring: FiniteNearRing) -> bool:
    return is_abelian(near_ring) and left_distributivity_witness(near_ring) is None


def has_unity(near_ring: FiniteNearRing) -> bool:
    return near_ring.one is not None


def is_zero_symmetric(near_ring: FiniteNearRing) -> bool:
    """x0 = 0 for every x"""
    return bool(np.all(near_ring.mul_table[:, near_ring.zero] == near_ring.zero))


def is_commutative(near_ring: FiniteNearRing) -> bool:
    return bool(np.array_equal(near_ring.mul_table, near_ring.mul_table.T))


def diagnostics(near_ring: FiniteNearRing) -> Dict[str, object]:
    """Summary flags reported by `validate`"""
    return {
        "order": near_ring.order,
        "zero": near_ring.zero,
        "one": near_ring.one,
        "abelian": is_abelian(near_ring),
        "ring": is_ring(near_ring),
        "zero_symmetric": is_zero_symmetric(near_ring),
        "commutative": is_commutative(near_ring),
        "left_distributivity_witness": left_distributivity_witness(near_ring),
    }


# --- Relabelling ---
def relabel(near_ring: FiniteNearRing, permutation: Sequence[int], name: Optional[str] = None) -> FiniteNearRing:
    """Copy of `near_ring` with element x renamed permutation[x]"""
    p = np.asarray(permutation, dtype=np.int64)
    inverse = np.argsort(p)
    add = p[near_ring.add_table[inverse[:, None], inverse[None, :]]]
    mul = p[near_ring.mul_table[inverse[:, None], inverse[None, :]]]
    labels = None
    if near_ring.labels:
        labels = tuple(near_ring.labels[int(i)] for i in inverse)
    return validate_near_ring(near_ring.order, add, mul, labels=labels,
                              name=near_ring.name if name is None else name)


def canonicalize(near_ring: FiniteNearRing) -> FiniteNearRing:
    """Relabel so that the additive identity is element 0"""
    if near_ring.zero == 0:
        return near_ring
    permutation = list(range(near_ring.order))
    permutation[0], permutation[near_ring.zero] = near_ring.zero, 0
    return relabel(near_ring, permutation)


def find_isomorphism(first: FiniteNearRing, second: FiniteNearRing) -> Optional[List[int]]:
    """Backtracking search for a bijection preserving both tables.

    Intended for small carriers: pruning only uses pairs whose images are
    already assigned.
    """
    if first.order != second.order:
        return None
    if is_abelian(first) != is_abelian(second) or has_unity(first) != has_unity(second):
        return None
    n = first.order
    image = [-1] * n
    used = [False] * n
    order = [first.zero] + [x for x in range(n) if x != first.zero]

    def consistent(assigned: List[int]) -> bool:
        for a in assigned:
            for b in assigned:
                for table_a, table_b in ((first.add_table, second.add_table),
                                         (first.mul_table, second.mul_table)):
                    c = int(table_a[a, b])
                    if image[c] >= 0 and image[c] != int(table_b[image[a], image[b]]):
                        return False
        return True

    def extend(position: int) -> bool:
        if position == n:
            return True
        x = order[position]
        candidates = [second.zero] if position == 0 else range(n)
        for y in candidates:
            if used[y]:
                continue
            image[x], used[y] = y, True
            if consistent(order[:position + 1]) and extend(position + 1):
                return True
            image[x], used[y] = -1, False
        return False

    return list(image) if extend(0) else None


def is_isomorphic(first: FiniteNearRing, second: FiniteNearRing) -> bool:
    return find_isomorphism(first, second) is not None
