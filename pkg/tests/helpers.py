"""Brute-force oracles shared by the test modules."""

from functools import lru_cache
from itertools import combinations, permutations
from typing import List, Tuple

from src.core import is_powerful
from src.models.code import BinarySet


def bset(*rows: str) -> BinarySet:
    return BinarySet.from_rows(list(rows))


def naive_zero_count(s: BinarySet, subset: int) -> int:
    return sum(1 for w in s.words if w & subset == 0)


def naive_is_powerful(s: BinarySet) -> bool:
    for x in range(1 << s.order):
        c = naive_zero_count(s, x)
        if c == 0 or c & (c - 1):
            return False
    return True


@lru_cache(maxsize=None)
def zero_containing_sets(order: int) -> Tuple[BinarySet, ...]:
    """Every subset of F_2^order that contains the zero word."""
    nonzero = range(1, 1 << order)
    out = []
    for mask in range(1 << len(nonzero)):
        words = [0] + [w for i, w in enumerate(nonzero) if (mask >> i) & 1]
        out.append(BinarySet.trusted(order, words))
    return tuple(out)


@lru_cache(maxsize=None)
def powerful_sets(order: int) -> Tuple[BinarySet, ...]:
    """Every labeled powerful set of the given order (order <= 4)."""
    nonzero = list(range(1, 1 << order))
    out = []
    size = 1
    while size <= 1 << order:
        for extra in combinations(nonzero, size - 1):
            s = BinarySet.trusted(order, (0,) + extra)
            if is_powerful(s):
                out.append(s)
        size *= 2
    return tuple(out)


def relabel(s: BinarySet, targets: Tuple[int, ...]) -> BinarySet:
    """targets[i] = 0-based new position of coordinate i+1."""
    words = []
    for w in s.words:
        out = 0
        for i, t in enumerate(targets):
            if (w >> i) & 1:
                out |= 1 << t
        words.append(out)
    return BinarySet.of(s.order, words)


def brute_force_isomorphic(a: BinarySet, b: BinarySet) -> bool:
    if a.order != b.order or a.size != b.size:
        return False
    return any(relabel(a, p).words == b.words for p in permutations(range(a.order)))


def brute_force_min_canonical(s: BinarySet) -> Tuple[int, ...]:
    return min(relabel(s, p).words for p in permutations(range(s.order)))


def all_antichains(order: int) -> List[Tuple[int, ...]]:
    """Antichains of nonzero words, by filtering every family."""
    nonzero = list(range(1, 1 << order))
    out = []
    for mask in range(1 << len(nonzero)):
        family = [w for i, w in enumerate(nonzero) if (mask >> i) & 1]
        if all(a & b != a and a & b != b for a, b in combinations(family, 2)):
            out.append(tuple(family))
    return out


def elimination_rank(words) -> int:
    """GF(2) rank by row reduction, independent of src.core."""
    pivots = {}
    for w in words:
        while w:
            top = w.bit_length() - 1
            if top not in pivots:
                pivots[top] = w
                break
            w ^= pivots[top]
    return len(pivots)
