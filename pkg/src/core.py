"""
Power-of-2 verification machinery, the rank transform, linearity and
special-element classification.
"""

import logging
from typing import Iterable, List, Optional

import numpy as np

from .config import settings
from .exceptions import IndexOutOfRange, NotPowerOfTwoSize, OrderTooLarge, UndefinedRank
from .models.code import BinarySet, ElementKind, ElementType, RankValue, ZetaTable
from .models.results import PowerFailure
from .utils.bits import drop_bit, exact_log2, full_mask

logger = logging.getLogger(__name__)


def check_zeta_order(order: int) -> None:
    """Raise OrderTooLarge if a 2^order table is over the configured caps."""
    if order > settings.max_zeta_order:
        raise OrderTooLarge(order, settings.max_zeta_order, "zeta table")
    if (1 << order) * 8 > settings.zeta_memory_cap_bytes:
        cap = (settings.zeta_memory_cap_bytes // 8).bit_length() - 1
        raise OrderTooLarge(order, cap, "zeta table memory")


def zeta_counts(order: int, words: Iterable[int]) -> np.ndarray:
    """Subset-sum transform of the indicator of `words` (distinct) over 2^order masks."""
    check_zeta_order(order)
    counts = np.zeros(1 << order, dtype=np.int64)
    idx = np.fromiter(words, dtype=np.int64)
    counts[idx] = 1
    for i in range(order):
        view = counts.reshape(-1, 2, 1 << i)
        view[:, 1, :] += view[:, 0, :]
    return counts


def _powers_of_two(counts: np.ndarray) -> np.ndarray:
    return (counts > 0) & ((counts & (counts - 1)) == 0)


def zeta_transform(s: BinarySet) -> ZetaTable:
    """
    Subset-sum transform of the indicator of S.

    Args:
        s: Set of order n, subject to the configured zeta order and memory caps

    Returns:
        ZetaTable whose entry at mask M counts the members contained in M
    """
    return ZetaTable(order=s.order, counts=zeta_counts(s.order, s.words))


def _check_subset(s: BinarySet, subset: int) -> None:
    if subset < 0 or subset >> s.order:
        raise IndexOutOfRange(subset.bit_length(), s.order)


def count_zero_on(s: BinarySet, subset: int) -> int:
    """Number of members of S that are zero on every coordinate of `subset`."""
    _check_subset(s, subset)
    return sum(1 for w in s.words if w & subset == 0)


def is_powerful(s: BinarySet) -> bool:
    """
    Check that every coordinate subset X leaves a power-of-2 number of members zero on X.

    Args:
        s: Set to test

    Returns:
        True when S contains the zero word, |S| is a power of 2 and every
        zero count is a power of 2
    """
    if not s.contains_zero or exact_log2(s.size) is None:
        return False
    return bool(np.all(_powers_of_two(zeta_counts(s.order, s.words))))


def first_failure(s: BinarySet) -> Optional[PowerFailure]:
    """
    Find where the power-of-2 property fails.

    Returns:
        The failing subset X with the fewest elements (ties broken by the
        smallest mask) and the number of members zero on it, or None when
        S is powerful.
    """
    counts = zeta_counts(s.order, s.words)
    bad = np.flatnonzero(~_powers_of_two(counts))
    if bad.size == 0:
        return None
    subsets = full_mask(s.order) ^ bad
    popcounts = np.zeros(subsets.shape, dtype=np.int64)
    for i in range(s.order):
        popcounts += (subsets >> i) & 1
    pick = int(np.lexsort((subsets, popcounts))[0])
    subset = int(subsets[pick])
    return PowerFailure(subset=subset, zeros=int(counts[bad[pick]]))


def gf2_rank(words: Iterable[int]) -> int:
    """Rank over GF(2) of the given words viewed as row vectors."""
    basis: List[int] = []
    for w in words:
        for b in basis:
            w = min(w, w ^ b)
        if w:
            basis.append(w)
            basis.sort(reverse=True)
    return len(basis)


def is_linear(s: BinarySet) -> bool:
    """True iff S contains zero and is closed under coordinatewise XOR."""
    return s.contains_zero and s.size == 1 << gf2_rank(s.words)


def dim(s: BinarySet) -> int:
    """log2 |S|; raises NotPowerOfTwoSize when |S| is not a power of 2."""
    d = exact_log2(s.size)
    if d is None:
        raise NotPowerOfTwoSize(f"|S| = {s.size} is not a power of 2")
    return d


def rank(s: BinarySet, subset: int) -> RankValue:
    """
    Rank of a coordinate subset.

    Args:
        s: Set containing the zero word
        subset: Mask X of coordinates

    Returns:
        RankValue holding |S| and the count of members zero on X; exact_log2
        is set when their ratio is a power of 2

    Raises:
        UndefinedRank: The zero word is not a member
    """
    if not s.contains_zero:
        raise UndefinedRank("rank is undefined for a set without the zero word")
    zeros = count_zero_on(s, subset)
    exact = exact_log2(s.size // zeros) if s.size % zeros == 0 else None
    return RankValue(total=s.size, zeros=zeros, exact_log2=exact)


def rank_table(s: BinarySet) -> List[RankValue]:
    """Rank of every singleton {e}, e = 1..order."""
    return [rank(s, 1 << i) for i in range(s.order)]


def _check_element(s: BinarySet, element: int) -> int:
    if element < 1 or element > s.order:
        raise IndexOutOfRange(element, s.order)
    return element - 1


def _deletion_injective(s: BinarySet, pos: int) -> bool:
    return len({drop_bit(w, pos) for w in s.words}) == s.size


def is_loop(s: BinarySet, element: int) -> bool:
    """No member has the element."""
    bit = 1 << _check_element(s, element)
    return all(w & bit == 0 for w in s.words)


def is_coloop(s: BinarySet, element: int) -> bool:
    """S is closed under flipping the element."""
    bit = 1 << _check_element(s, element)
    members = s.word_set
    return all(w ^ bit in members for w in s.words)


def is_frame(s: BinarySet, element: int) -> bool:
    """The element is zero on the zero word only."""
    bit = 1 << _check_element(s, element)
    return s.contains_zero and [w for w in s.words if w & bit == 0] == [0]


def near_frame_partner(s: BinarySet, element: int) -> Optional[int]:
    """
    The partner v when `element` is a near-frame, else None.

    The element must be zero exactly on the zero word and one nonzero v, and
    deleting it must not merge two words (so S is T+□\\v for T = S minus the element).
    """
    pos = _check_element(s, element)
    bit = 1 << pos
    zeros = [w for w in s.words if w & bit == 0]
    if not s.contains_zero or len(zeros) != 2:
        return None
    if not _deletion_injective(s, pos):
        return None
    return zeros[1]


def is_star(s: BinarySet, element: int) -> bool:
    """|S| = 2^(order-1) and deleting the element maps S onto all of F_2^(order-1)."""
    pos = _check_element(s, element)
    return s.size == 1 << (s.order - 1) and _deletion_injective(s, pos)


def classify_element(s: BinarySet, element: int) -> ElementKind:
    """Classify an element; Loop, Coloop, Frame, NearFrame, Star are tried in that order."""
    if is_loop(s, element):
        return ElementKind(kind=ElementType.LOOP)
    if is_coloop(s, element):
        return ElementKind(kind=ElementType.COLOOP)
    if is_frame(s, element):
        return ElementKind(kind=ElementType.FRAME)
    partner = near_frame_partner(s, element)
    if partner is not None:
        return ElementKind(kind=ElementType.NEAR_FRAME, partner=partner)
    if is_star(s, element):
        return ElementKind(kind=ElementType.STAR)
    return ElementKind(kind=ElementType.ORDINARY)
