"""
Reductions, single-element extensions, combinators and disjunctive closure.

New elements are always appended as the last coordinate.
"""

import logging
from typing import List, Optional, Sequence, Tuple

from .config import settings
from .core import check_zeta_order, dim, is_powerful, rank
from .exceptions import (
    IndexOutOfRange,
    InvalidNearFramePartner,
    MissingZeroWord,
    NotPowerful,
    OrderMismatch,
    TooManyGenerators,
)
from .models.code import BinarySet
from .models.results import (
    BulletRankProfile,
    DeletionResult,
    ExtensionSpec,
    ExtensionType,
    MutualFramingCase,
    MutualFramingRankProfile,
    MutualFramingVerdict,
    RankCheck,
)
from .utils.bits import drop_bit, full_mask, popcount

logger = logging.getLogger(__name__)


def _position(s: BinarySet, element: int) -> int:
    if element < 1 or element > s.order:
        raise IndexOutOfRange(element, s.order)
    return element - 1


def _same_order(q: BinarySet, r: BinarySet) -> int:
    if q.order != r.order:
        raise OrderMismatch(f"orders differ: {q.order} != {r.order}")
    return q.order


# Reductions

def contract(s: BinarySet, element: int) -> BinarySet:
    """Keep the words avoiding `element`, then drop that coordinate."""
    pos = _position(s, element)
    bit = 1 << pos
    return BinarySet.trusted(s.order - 1, (drop_bit(w, pos) for w in s.words if not w & bit))


def delete(s: BinarySet, element: int) -> DeletionResult:
    """Drop coordinate `element` from every word, collapsing duplicates."""
    pos = _position(s, element)
    result = BinarySet.of(s.order - 1, (drop_bit(w, pos) for w in s.words))
    return DeletionResult(result=result, had_duplicates=result.size < s.size)


def puncture(s: BinarySet, element: int) -> BinarySet:
    return delete(s, element).result


# Extensions

def extend(t: BinarySet, spec: ExtensionSpec) -> BinarySet:
    """
    Adjoin one new element (the last coordinate) to T.

    Args:
        t: The set being extended
        spec: Extension kind plus its partner word or duplicated element

    Returns:
        The extended set of order t.order + 1
    """
    top = 1 << t.order
    kind = spec.kind

    if kind == ExtensionType.LOOP:
        return BinarySet.trusted(t.order + 1, t.words)

    if kind == ExtensionType.COLOOP:
        return BinarySet.trusted(t.order + 1, t.words + tuple(w | top for w in t.words))

    if kind == ExtensionType.FRAME:
        if not t.contains_zero:
            raise MissingZeroWord("framing requires the zero word")
        return BinarySet.trusted(t.order + 1, (0,) + tuple(w | top for w in t.words[1:]))

    if kind == ExtensionType.NEAR_FRAME:
        v = spec.partner
        if not t.contains_zero:
            raise MissingZeroWord("a near-frame extension requires the zero word")
        if v is None or v == 0 or not t.contains(v):
            raise InvalidNearFramePartner(f"partner {v} must be a nonzero member of T")
        return BinarySet.of(t.order + 1, (w if w in (0, v) else w | top for w in t.words))

    if kind == ExtensionType.STAR:
        check_zeta_order(t.order + 1)
        members = t.word_set
        return BinarySet.trusted(
            t.order + 1,
            [v for v in range(top) if v in members] + [v | top for v in range(top) if v not in members],
        )

    if kind == ExtensionType.PARALLEL:
        if spec.element is None:
            raise IndexOutOfRange(0, t.order)
        pos = _position(t, spec.element)
        return BinarySet.of(t.order + 1, (w | (((w >> pos) & 1) << t.order) for w in t.words))

    raise ValueError(f"unknown extension kind {kind}")


# Combinators

def direct_sum(q: BinarySet, r: BinarySet) -> BinarySet:
    """All concatenations uv with u in Q and v in R."""
    shift = q.order
    return BinarySet.of(q.order + r.order, (u | (v << shift) for u in q.words for v in r.words))


def _zero_and_maybe_ones(s: BinarySet) -> bool:
    return s.contains_zero and all(w in (0, s.all_ones) for w in s.words)


def _mutual_framing_case(q: BinarySet, r: BinarySet) -> MutualFramingCase:
    q_ones = q.contains(q.all_ones)
    r_ones = r.contains(r.all_ones)
    if (_zero_and_maybe_ones(q) and r_ones) or (_zero_and_maybe_ones(r) and q_ones):
        return MutualFramingCase.CASE_A
    if q.size == r.size and not q_ones and not r_ones:
        return MutualFramingCase.CASE_B
    return MutualFramingCase.NEITHER


def mutual_framing(q: BinarySet, r: BinarySet) -> Tuple[BinarySet, MutualFramingVerdict]:
    """
    Build Q#R and the verdict on its powerfulness.

    Returns:
        (Q#R, MutualFramingVerdict); the construction is returned even when
        it is not powerful.
    """
    m, n = q.order, r.order
    ones_m, ones_n = full_mask(m), full_mask(n)
    words = {0, ones_m | (ones_n << m)}
    words.update(u | (ones_n << m) for u in q.words if u)
    words.update(ones_m | (v << m) for v in r.words if v)
    result = BinarySet.of(m + n, words)

    inputs_powerful = is_powerful(q) and is_powerful(r)
    case = _mutual_framing_case(q, r)
    verdict = MutualFramingVerdict(
        powerful=inputs_powerful and case != MutualFramingCase.NEITHER,
        case=case,
        inputs_powerful=inputs_powerful,
        result_powerful=is_powerful(result),
    )
    return result, verdict


def mutual_framing_rank_profile(q: BinarySet, r: BinarySet, left: int, right: int) -> MutualFramingRankProfile:
    """
    Evaluate the rank relations of a powerful Q#R built from |Q| = |R| with no all-ones word.

    Args:
        q: Left operand of order m
        r: Right operand of order n
        left: Nonempty X in Q's coordinates 1..m
        right: Nonempty Y in R's own coordinates 1..n

    Returns:
        MutualFramingRankProfile with expected ranks rank_Q(X) + 1,
        rank_R(Y) + 1 and dim Q + 1 for X+Y
    """
    for name, s in (("Q", q), ("R", r)):
        if not is_powerful(s):
            raise NotPowerful(f"{name} must be powerful")
    if _mutual_framing_case(q, r) != MutualFramingCase.CASE_B:
        raise ValueError("rank relations need |Q| = |R| and no all-ones word in either operand")
    if not 0 < left <= q.all_ones or not 0 < right <= r.all_ones:
        raise ValueError("X and Y must be nonempty subsets of their own operand's coordinates")

    s, _ = mutual_framing(q, r)
    shifted = right << q.order

    def check(subset: int, expected: int) -> RankCheck:
        return RankCheck(subset=subset, observed=rank(s, subset), expected=expected)

    return MutualFramingRankProfile(
        left=check(left, rank(q, left).exact_log2 + 1),
        right=check(shifted, rank(r, right).exact_log2 + 1),
        both=check(left | shifted, dim(q) + 1),
    )


def intersection(q: BinarySet, r: BinarySet) -> BinarySet:
    order = _same_order(q, r)
    return BinarySet.trusted(order, sorted(q.word_set & r.word_set))


def bullet(q: BinarySet, r: BinarySet) -> BinarySet:
    """Tag every v in F2^n with two bits recording (v not in Q, v not in R)."""
    n = _same_order(q, r)
    check_zeta_order(n + 2)
    in_q, in_r = q.word_set, r.word_set
    first_tag, second_tag = 1 << n, 1 << (n + 1)
    return BinarySet.of(
        n + 2,
        (
            v | (0 if v in in_q else first_tag) | (0 if v in in_r else second_tag)
            for v in range(1 << n)
        ),
    )


def bullet_rank_profile(q: BinarySet, r: BinarySet, subset: int) -> BulletRankProfile:
    """Evaluate both sides of the four rank identities of Q•R at X ⊆ [n]."""
    n = _same_order(q, r)
    both = intersection(q, r)
    for name, s in (("Q", q), ("R", r), ("Q∩R", both)):
        if not is_powerful(s):
            raise NotPowerful(f"{name} must be powerful")
    s = bullet(q, r)
    first_tag, second_tag = 1 << n, 1 << (n + 1)

    def check(extra: int, expected: int) -> RankCheck:
        return RankCheck(subset=subset | extra, observed=rank(s, subset | extra), expected=expected)

    return BulletRankProfile(
        plain=check(0, popcount(subset)),
        with_first_tag=check(first_tag, n - dim(q) + rank(q, subset).exact_log2),
        with_second_tag=check(second_tag, n - dim(r) + rank(r, subset).exact_log2),
        with_both_tags=check(first_tag | second_tag, n - dim(both) + rank(both, subset).exact_log2),
    )


def diamond(s1: BinarySet, s2: BinarySet) -> BinarySet:
    """(S1 + loop) • (S2 + frame), of order n + 3."""
    _same_order(s1, s2)
    return bullet(
        extend(s1, ExtensionSpec(kind=ExtensionType.LOOP)),
        extend(s2, ExtensionSpec(kind=ExtensionType.FRAME)),
    )


# Permutative sets and disjunctive closure

def is_permutative(s: BinarySet) -> Optional[List[int]]:
    """
    Columns (1-based, ascending) carrying a permutation submatrix of order |S|.

    Each unit column is adjacent to exactly one row in the row/column
    bipartite graph, so giving every row its first unit column is a maximum
    matching. Returns None when some row has no unit column.
    """
    owner = {}
    for pos in range(s.order):
        bit = 1 << pos
        rows = [i for i, w in enumerate(s.words) if w & bit]
        if len(rows) == 1:
            owner.setdefault(rows[0], pos + 1)
    if len(owner) != s.size:
        return None
    return sorted(owner.values())


def disjunctive_closure(s: BinarySet) -> BinarySet:
    """All coordinatewise ORs of subsets of S, the empty OR included."""
    if s.size > settings.max_closure_generators:
        raise TooManyGenerators(f"{s.size} generators exceed cap {settings.max_closure_generators}")
    closure = {0}
    for u in s.words:
        closure |= {c | u for c in closure}
    return BinarySet.of(s.order, closure)


# Relabeling

def permute(s: BinarySet, perm: Sequence[int]) -> BinarySet:
    """Relabel: element i+1 moves to position perm[i] (1-based)."""
    if sorted(perm) != list(range(1, s.order + 1)):
        raise ValueError(f"{list(perm)} is not a permutation of 1..{s.order}")
    targets = [p - 1 for p in perm]

    def relabel(w: int) -> int:
        out = 0
        for i, t in enumerate(targets):
            if (w >> i) & 1:
                out |= 1 << t
        return out

    return BinarySet.of(s.order, (relabel(w) for w in s.words))


def move_to_last(s: BinarySet, element: int) -> BinarySet:
    """Relabel so that `element` becomes the last coordinate, others keeping their order."""
    _position(s, element)
    perm = [j if j < element else (s.order if j == element else j - 1) for j in range(1, s.order + 1)]
    return permute(s, perm)
