"""
Families of nonisomorphic loopless frameless powerful sets built by diamond rounds.

Each round replaces the family F by {S1 ◇ S2 : S1, S2 in F}, raising the
order by 3. Seeds of order n must be powerful, loopless, frameless and of
size 2^(n-2); the members then keep all three properties.
"""

import logging
from typing import List, Optional, Sequence

from ..canon import canonical_words, invariant_fingerprint
from ..config import settings
from ..core import is_frame, is_linear, is_powerful
from ..exceptions import OrderTooLarge, SeedPreconditionViolated
from ..models.code import BinarySet
from ..models.reports import FamilyReport
from ..models.results import ExtensionSpec, ExtensionType
from ..ops import diamond, extend
from ..utils.bits import full_mask

logger = logging.getLogger(__name__)

# Disjunctive closure of {00011, 01100, 10101}.
CLOSURE_SEED = BinarySet.from_rows(
    ["00000", "00011", "01100", "10101", "01111", "10111", "11101", "11111"]
)

# Every single-coordinate deletion of this set merges two words.
DUPLICATING_SEED = BinarySet.from_rows(
    ["00000", "00111", "01011", "01111", "10101", "10111", "11010", "11011"]
)

ORDER5_SEEDS = (CLOSURE_SEED, DUPLICATING_SEED)


def is_loopless(s: BinarySet) -> bool:
    union = 0
    for w in s.words:
        union |= w
    return union == full_mask(s.order)


def is_frameless(s: BinarySet) -> bool:
    return not any(is_frame(s, e) for e in range(1, s.order + 1))


def lift_seeds(seeds: Sequence[BinarySet], order: int) -> List[BinarySet]:
    """Coloop-extend each seed up to `order`; size doubles with each new element."""
    lifted = []
    for seed in seeds:
        if order < seed.order:
            raise ValueError(f"cannot lift a seed of order {seed.order} down to {order}")
        s = seed
        while s.order < order:
            s = extend(s, ExtensionSpec(kind=ExtensionType.COLOOP))
        lifted.append(s)
    return lifted


def check_seeds(seeds: Sequence[BinarySet]) -> int:
    """Validate seeds and return their common order; raises SeedPreconditionViolated."""
    if not seeds:
        raise ValueError("at least one seed is required")
    order = seeds[0].order
    for index, seed in enumerate(seeds):
        if seed.order != order:
            raise SeedPreconditionViolated(index, f"of order {order}")
        if order < 2 or seed.size != 1 << (order - 2):
            raise SeedPreconditionViolated(index, f"of size 2^{order - 2}")
        if not is_powerful(seed):
            raise SeedPreconditionViolated(index, "powerful")
        if not is_loopless(seed):
            raise SeedPreconditionViolated(index, "loopless")
        if not is_frameless(seed):
            raise SeedPreconditionViolated(index, "frameless")
    return order


class FamilyService:
    """Builds diamond families and verifies every member."""

    def build(self, seeds: Sequence[BinarySet], rounds: int = 1) -> FamilyReport:
        """
        Close the seeds under `rounds` diamond rounds.

        Args:
            seeds: Seeds of a common order n
            rounds: Number of rounds, each taking all ordered pairs

        Returns:
            FamilyReport with members of order n + 3 * rounds
        """
        if rounds < 1:
            raise ValueError("rounds must be at least 1")
        order = check_seeds(seeds)
        final_order = order + 3 * rounds
        if final_order > settings.max_family_order:
            raise OrderTooLarge(final_order, settings.max_family_order, "diamond family")

        members: List[BinarySet] = list(seeds)
        round_counts: List[int] = []
        try:
            for r in range(rounds):
                members = [diamond(a, b) for a in members for b in members]
                round_counts.append(len(members))
                logger.debug(f"Diamond round {r + 1}: {len(members)} members of order {members[0].order}")
        except Exception as e:
            logger.error(f"Diamond round failed: {e}")
            raise

        previous = len(seeds)
        recursion_holds = True
        for count in round_counts:
            recursion_holds = recursion_holds and count == previous * previous
            previous = count

        canonicalized = final_order <= settings.max_canon_order
        pairwise: Optional[bool]
        if canonicalized:
            members = [BinarySet.trusted(final_order, canonical_words(final_order, s.words)) for s in members]
            pairwise = len({s.words for s in members}) == len(members)
        else:
            distinct = len({invariant_fingerprint(s) for s in members}) == len(members)
            pairwise = True if distinct else None

        report = FamilyReport(
            seeds=list(seeds),
            members=members,
            rounds=rounds,
            order=final_order,
            size=members[0].size,
            round_counts=round_counts,
            recursion_holds=recursion_holds,
            all_powerful=all(is_powerful(s) for s in members),
            all_loopless=all(is_loopless(s) for s in members),
            all_frameless=all(is_frameless(s) for s in members),
            all_nonlinear=not any(is_linear(s) for s in members),
            pairwise_nonisomorphic=pairwise,
            canonicalized=canonicalized,
        )
        logger.info(
            f"Diamond family: {len(seeds)} seeds, {rounds} rounds -> {len(members)} members "
            f"of order {final_order}"
        )
        return report


def diamond_family(seeds: Sequence[BinarySet], rounds: int = 1) -> FamilyReport:
    return FamilyService().build(seeds, rounds)
