"""
Minimal nonempty members and reconstruction of a powerful set from them.

A powerful set is determined by its clutter of minimal nonempty members.
`reconstruct` rebuilds it by fixing the indicator f(X) for subsets X in
order of increasing size, using only the running sum of f over the proper
subsets of X:

    X in the clutter   -> f(X) = 1
    sum == 1 or 2      -> f(X) = 0
    sum == 2^i - 1     -> f(X) = 1   (i >= 2)
    sum == 2^i         -> f(X) = 0   (i >= 2)
    anything else      -> reject

Running sums live in a table updated over the supersets of every X with
f(X) = 1, so each sum is read in O(1).
"""

import logging
from functools import lru_cache
from typing import Callable, Iterator, List, Optional, Sequence, Tuple

from .config import settings
from .core import is_powerful
from .exceptions import OrderTooLarge
from .models.code import BinarySet, Clutter
from .models.results import ReconstructionOutcome, ReconstructionStatus
from .utils.bits import full_mask, is_antichain, is_power_of_two, popcount

logger = logging.getLogger(__name__)

__all__ = [
    "is_antichain",
    "min_members",
    "reconstruct",
    "enumerate_antichains",
    "iter_antichains",
    "walk_powerful_supports",
]


def min_members(s: BinarySet) -> Clutter:
    """The inclusion-minimal nonzero words of S."""
    minimal: List[int] = []
    for w in sorted((w for w in s.words if w), key=popcount):
        if not any(m & w == m for m in minimal):
            minimal.append(w)
    return Clutter.trusted(s.order, sorted(minimal))


@lru_cache(maxsize=None)
def subsets_by_size(order: int) -> Tuple[int, ...]:
    """Nonzero masks ordered by popcount, then by value."""
    return tuple(sorted(range(1, 1 << order), key=lambda x: (popcount(x), x)))


def _iter_supersets(x: int, full: int) -> Iterator[int]:
    rest = full ^ x
    sub = rest
    while True:
        yield x | sub
        if sub == 0:
            return
        sub = (sub - 1) & rest


@lru_cache(maxsize=8)
def superset_table(order: int) -> Tuple[Tuple[int, ...], ...]:
    full = full_mask(order)
    return tuple(tuple(_iter_supersets(x, full)) for x in range(1 << order))


def _cascade(order: int, members: Sequence[int]) -> Tuple[Optional[List[int]], Optional[int]]:
    """Run the reconstruction cascade; returns (support, None) or (None, rejected subset)."""
    full = full_mask(order)
    clutter = set(members)
    below = [1] * (1 << order)
    support = [0]
    for x in subsets_by_size(order):
        s = below[x]
        if x in clutter:
            value = 1
        elif s <= 2 or is_power_of_two(s):
            value = 0
        elif is_power_of_two(s + 1):
            value = 1
        else:
            return None, x
        if value:
            support.append(x)
            for m in _iter_supersets(x, full):
                below[m] += 1
    return sorted(support), None


def reconstruct(c: Clutter) -> ReconstructionOutcome:
    """
    Rebuild the unique powerful set whose minimal nonempty members are C.

    Args:
        c: Candidate clutter

    Returns:
        Accepted with the set, rejected at the first subset whose running sum
        is neither 2^i nor 2^i - 1, or rejected by the final powerfulness and
        minimal-member check.
    """
    if c.order > settings.max_reconstruct_order:
        raise OrderTooLarge(c.order, settings.max_reconstruct_order, "reconstruct")

    support, witness = _cascade(c.order, c.members)
    if support is None:
        return ReconstructionOutcome(status=ReconstructionStatus.REJECTED_CASCADE, witness=witness)

    result = BinarySet.trusted(c.order, support)
    if not is_powerful(result):
        return ReconstructionOutcome(
            status=ReconstructionStatus.REJECTED_POST_CHECK, reason="result is not powerful"
        )
    if min_members(result).members != c.members:
        return ReconstructionOutcome(
            status=ReconstructionStatus.REJECTED_POST_CHECK,
            reason="minimal members of the result differ from the input",
        )
    return ReconstructionOutcome(status=ReconstructionStatus.ACCEPTED, result=result)


def _check_antichain_order(order: int) -> None:
    if order > settings.max_antichain_order:
        raise OrderTooLarge(order, settings.max_antichain_order, "antichain enumeration")


@lru_cache(maxsize=8)
def _comparable_masks(order: int) -> Tuple[int, ...]:
    """For each word w, a bitset over words u with u ⊆ w or w ⊆ u."""
    full = full_mask(order)
    masks = [0] * (full + 1)
    for w in range(1, full + 1):
        bits = 0
        for u in range(1, full + 1):
            inter = u & w
            if inter == u or inter == w:
                bits |= 1 << u
        masks[w] = bits
    return tuple(masks)


def iter_antichains(
    order: int,
    first_words: Optional[Sequence[int]] = None,
    include_empty: bool = True,
) -> Iterator[Tuple[int, ...]]:
    """
    Yield every antichain of nonzero words as an increasing tuple.

    DFS over words in increasing integer order; a word is added only when it
    is incomparable to all chosen words. `first_words` restricts the smallest
    member, which partitions the antichains for parallel runs.
    """
    _check_antichain_order(order)
    full = full_mask(order)
    comparable = _comparable_masks(order)
    chosen: List[int] = []

    def extend(start: int, blocked: int) -> Iterator[Tuple[int, ...]]:
        for w in range(start, full + 1):
            if (blocked >> w) & 1:
                continue
            chosen.append(w)
            yield tuple(chosen)
            yield from extend(w + 1, blocked | comparable[w])
            chosen.pop()

    if include_empty:
        yield ()
    firsts = range(1, full + 1) if first_words is None else sorted(first_words)
    for w in firsts:
        chosen.append(w)
        yield tuple(chosen)
        yield from extend(w + 1, comparable[w])
        chosen.pop()


def enumerate_antichains(
    order: int,
    visitor: Callable[[Clutter], None],
    first_words: Optional[Sequence[int]] = None,
    include_empty: bool = True,
) -> int:
    """Call `visitor` once per antichain of nonzero subsets; returns the count."""
    count = 0
    for members in iter_antichains(order, first_words, include_empty):
        visitor(Clutter.trusted(order, members))
        count += 1
    return count


def walk_powerful_supports(
    order: int,
    visitor: Callable[[Tuple[int, ...], Tuple[int, ...]], None],
    singleton_pattern: Optional[int] = None,
) -> Tuple[int, int]:
    """
    Enumerate clutters and reconstruct them in one pass.

    Subsets are decided in the same order as `reconstruct`. A subset may join
    the clutter only when its running sum is 1, which is exactly when no
    chosen member lies below it, so every antichain is reached once and a
    rejected prefix prunes all antichains extending it. Singletons come
    first and always branch; `singleton_pattern` fixes which of them are in
    the clutter, which partitions the walk for parallel runs.

    Args:
        order: Ground-set size
        visitor: Called with (clutter members, support words) for each accepted clutter
        singleton_pattern: Optional mask of the singletons forced into the clutter

    Returns:
        (accepted, rejected) where rejected counts pruned prefixes
    """
    _check_antichain_order(order)
    xs = subsets_by_size(order)
    sup = superset_table(order)
    below = [1] * (1 << order)
    members: List[int] = []
    support: List[int] = [0]
    stats = [0, 0]
    last = len(xs)

    def bump(x: int, delta: int) -> None:
        for m in sup[x]:
            below[m] += delta

    def take(i: int, x: int, in_clutter: bool) -> None:
        if in_clutter:
            members.append(x)
        support.append(x)
        bump(x, 1)
        step(i + 1)
        bump(x, -1)
        support.pop()
        if in_clutter:
            members.pop()

    def step(i: int) -> None:
        if i == last:
            stats[0] += 1
            visitor(tuple(sorted(members)), tuple(sorted(support)))
            return
        x = xs[i]
        s = below[x]
        if s == 1:
            forced = None
            if singleton_pattern is not None and i < order:
                forced = bool((singleton_pattern >> i) & 1)
            if forced is None or forced:
                take(i, x, True)
            if forced is None or not forced:
                step(i + 1)
        elif is_power_of_two(s):
            step(i + 1)
        elif is_power_of_two(s + 1):
            take(i, x, False)
        else:
            stats[1] += 1

    step(0)
    return stats[0], stats[1]
