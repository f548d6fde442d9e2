"""
Canonical forms of binary sets under coordinate permutation.

Columns are first split into classes by a permutation-invariant signature
(weight plus the multiset of pairwise co-occurrence counts). Classes are
placed in consecutive target positions sorted by signature, and only
permutations respecting those blocks are tried. Relabeled word lists are
compared in numpy batches; the lexicographically least sorted list wins.
"""

import logging
from functools import lru_cache
from itertools import islice, permutations, product
from math import factorial, prod
from typing import Iterable, Iterator, List, Sequence, Tuple

import numpy as np

from .config import settings
from .exceptions import OrderTooLarge
from .models.code import BinarySet
from .models.results import CanonicalForm
from .ops import permute
from .utils.bits import popcount

logger = logging.getLogger(__name__)

ColumnInvariant = Tuple[int, Tuple[int, ...]]


def _bit_matrix(order: int, words: Sequence[int]) -> np.ndarray:
    """Rows are words, columns are coordinates 1..order."""
    w = np.asarray(words, dtype=np.int64).reshape(-1, 1)
    return (w >> np.arange(order, dtype=np.int64)) & 1


def _column_invariants(b: np.ndarray) -> List[ColumnInvariant]:
    co = b.T @ b
    order = co.shape[0]
    out = []
    for i in range(order):
        others = sorted(int(co[i, j]) for j in range(order) if j != i)
        out.append((int(co[i, i]), tuple(others)))
    return out


def column_invariants(s: BinarySet) -> List[ColumnInvariant]:
    """Per-coordinate (weight, sorted pairwise co-occurrence counts)."""
    if s.order == 0:
        return []
    return _column_invariants(_bit_matrix(s.order, s.words))


def invariant_fingerprint(s: BinarySet) -> Tuple:
    """
    Isomorphism invariant usable at any order.

    Combines size, the multiset of column invariants and the multiset of
    word weights. Different fingerprints prove non-isomorphism; equal ones
    prove nothing.
    """
    return (
        s.order,
        s.size,
        tuple(sorted(column_invariants(s))),
        tuple(sorted(popcount(w) for w in s.words)),
    )


def _chunks(items: Iterable, size: int) -> Iterator[list]:
    it = iter(items)
    while True:
        chunk = list(islice(it, size))
        if not chunk:
            return
        yield chunk


Blocks = Tuple[Tuple[int, ...], ...]


def _build_targets(order: int, combos: Sequence[Tuple[Tuple[int, ...], ...]]) -> np.ndarray:
    """targets[k, col] = 0-based new position of column col under the k-th block permutation."""
    targets = np.empty((len(combos), order), dtype=np.int64)
    for row, combo in enumerate(combos):
        pos = 0
        for block in combo:
            for col in block:
                targets[row, col] = pos
                pos += 1
    return targets


def _block_permutations(blocks: Blocks) -> Iterator[Tuple[Tuple[int, ...], ...]]:
    return product(*(permutations(block) for block in blocks))


@lru_cache(maxsize=4096)
def _small_targets(order: int, blocks: Blocks) -> np.ndarray:
    return _build_targets(order, list(_block_permutations(blocks)))


def _target_batches(order: int, blocks: Blocks) -> Iterator[np.ndarray]:
    total = prod(factorial(len(block)) for block in blocks)
    if total <= settings.canon_batch_size:
        yield _small_targets(order, blocks)
        return
    for chunk in _chunks(_block_permutations(blocks), settings.canon_batch_size):
        yield _build_targets(order, chunk)


def _canonical(order: int, words: Sequence[int]) -> Tuple[Tuple[int, ...], Tuple[int, ...]]:
    if order > settings.max_canon_order:
        raise OrderTooLarge(order, settings.max_canon_order, "canonical form")
    identity = tuple(range(1, order + 1))
    if order == 0 or not words:
        return tuple(words), identity

    b = _bit_matrix(order, words)
    inv = _column_invariants(b)
    blocks = tuple(tuple(i for i in range(order) if inv[i] == key) for key in sorted(set(inv)))

    best = None
    best_targets = None
    for targets in _target_batches(order, blocks):
        relabeled = b @ (np.int64(1) << targets).T
        relabeled.sort(axis=0)

        candidates = np.arange(targets.shape[0])
        for r in range(relabeled.shape[0]):
            values = relabeled[r, candidates]
            candidates = candidates[values == values.min()]
            if candidates.size == 1:
                break
        pick = int(candidates[0])
        column = tuple(int(v) for v in relabeled[:, pick])
        if best is None or column < best:
            best = column
            best_targets = targets[pick].copy()

    return best, tuple(int(t) + 1 for t in best_targets)


def canonical_words(order: int, words: Sequence[int]) -> Tuple[int, ...]:
    """Canonical sorted word tuple without building result models."""
    return _canonical(order, words)[0]


def canonical_form(s: BinarySet) -> CanonicalForm:
    """
    Canonical representative of the isomorphism class of S.

    Args:
        s: Set of order at most the configured canon cap

    Returns:
        CanonicalForm whose witness maps each element to its new position;
        `apply_permutation(s, witness)` equals the canonical set.
    """
    words, witness = _canonical(s.order, s.words)
    return CanonicalForm(order=s.order, words=words, witness=witness)


def apply_permutation(s: BinarySet, witness: Sequence[int]) -> BinarySet:
    return permute(s, witness)


def is_isomorphic(s1: BinarySet, s2: BinarySet) -> bool:
    if s1.order != s2.order or s1.size != s2.size:
        return False
    if invariant_fingerprint(s1) != invariant_fingerprint(s2):
        return False
    return canonical_words(s1.order, s1.words) == canonical_words(s2.order, s2.words)
