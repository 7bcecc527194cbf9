"""Subset masks over carrier indices.

A subset of a carrier {0..n-1} is stored as a Python int whose bit i is set
when element i belongs to the subset. Masks are immutable, hashable and
compare by value, which is all the ideal engine needs.
"""
from typing import Iterable, List, Optional, Sequence, Tuple

import numpy as np

SubsetMask = int


def get_bit(mask: SubsetMask, index: int) -> bool:
    return (mask >> index) & 1 == 1


def set_bit(mask: SubsetMask, index: int) -> SubsetMask:
    return mask | (1 << index)


def single(index: int) -> SubsetMask:
    return 1 << index


def full(order: int) -> SubsetMask:
    return (1 << order) - 1


def from_indices(indices: Iterable[int]) -> SubsetMask:
    mask = 0
    for index in indices:
        mask |= 1 << int(index)
    return mask


def from_array(values: np.ndarray) -> SubsetMask:
    """Mask of every value appearing in an integer array of any shape"""
    return from_indices(np.unique(values).tolist())


def members(mask: SubsetMask) -> List[int]:
    """Set bits in increasing order"""
    found = []
    index = 0
    while mask:
        if mask & 1:
            found.append(index)
        mask >>= 1
        index += 1
    return found


def member_array(mask: SubsetMask) -> np.ndarray:
    return np.array(members(mask), dtype=np.int64)


def indicator(mask: SubsetMask, order: int) -> np.ndarray:
    """Boolean membership vector of length `order`"""
    flags = np.zeros(order, dtype=bool)
    flags[members(mask)] = True
    return flags


def size(mask: SubsetMask) -> int:
    return bin(mask).count("1")


def is_subset(inner: SubsetMask, outer: SubsetMask) -> bool:
    return inner & ~outer == 0


def is_proper_subset(inner: SubsetMask, outer: SubsetMask) -> bool:
    return inner != outer and is_subset(inner, outer)


def sort_key(mask: SubsetMask) -> Tuple[int, Tuple[int, ...]]:
    """Canonical order: by size, then lexicographically by members"""
    return (size(mask), tuple(members(mask)))


def canonical_order(masks: Iterable[SubsetMask]) -> List[SubsetMask]:
    return sorted(set(masks), key=sort_key)


def format_mask(mask: SubsetMask, labels: Optional[Sequence[str]] = None) -> str:
    names = [labels[i] if labels else str(i) for i in members(mask)]
    return "{" + ", ".join(names) + "}"


def parse_indices(text: str, order: int) -> SubsetMask:
    """Parse '0,2,4' into a mask, rejecting indices outside the carrier"""
    from .errors import MalformedTable

    mask = 0
    for part in text.split(","):
        part = part.strip()
        if not part:
            continue
        try:
            index = int(part)
        except ValueError:
            raise MalformedTable(f"'{part}' is not an element index")
        if not 0 <= index < order:
            raise MalformedTable(f"element index {index} outside carrier of order {order}", (index,))
        mask |= 1 << index
    return mask
