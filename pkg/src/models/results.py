"""
Result models returned by operations on binary sets.
"""

from enum import Enum
from typing import List, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field

from .code import BinarySet, RankValue


class PowerFailure(BaseModel):
    """A subset X on which the power-of-2 property fails."""
    model_config = ConfigDict(frozen=True)

    subset: int = Field(..., description="Mask of the failing coordinate subset X")
    zeros: int = Field(..., ge=0, description="Number of members zero on X")


class DeletionResult(BaseModel):
    """Outcome of deleting a coordinate from every word."""
    model_config = ConfigDict(frozen=True)

    result: BinarySet = Field(..., description="The deleted set with duplicates collapsed")
    had_duplicates: bool = Field(..., description="True iff two words collided")


class ExtensionType(str, Enum):
    LOOP = "loop"
    COLOOP = "coloop"
    FRAME = "frame"
    NEAR_FRAME = "near_frame"
    STAR = "star"
    PARALLEL = "parallel"


class ExtensionSpec(BaseModel):
    """Which single-element extension to apply."""
    model_config = ConfigDict(frozen=True)

    kind: ExtensionType
    partner: Optional[int] = Field(None, description="Near-frame partner word (member of T)")
    element: Optional[int] = Field(None, description="Element duplicated by a parallel extension")


class MutualFramingCase(str, Enum):
    CASE_A = "case_a"
    CASE_B = "case_b"
    NEITHER = "neither"


class MutualFramingVerdict(BaseModel):
    """Predicted and observed powerfulness of a mutual framing."""
    model_config = ConfigDict(frozen=True)

    powerful: bool = Field(..., description="Predicted: both inputs powerful and case A or B holds")
    case: MutualFramingCase
    inputs_powerful: bool = Field(..., description="Both operands are powerful")
    result_powerful: bool = Field(..., description="Observed is_powerful of the construction")

    @property
    def agrees(self) -> bool:
        return self.powerful == self.result_powerful


class RankCheck(BaseModel):
    """One rank identity of a combinator evaluated at a given subset."""
    model_config = ConfigDict(frozen=True)

    subset: int = Field(..., description="Mask (in the combined coordinates) whose rank was taken")
    observed: RankValue
    expected: int

    @property
    def holds(self) -> bool:
        return self.observed.exact_log2 == self.expected


class BulletRankProfile(BaseModel):
    """The four rank identities of Q•R at X, X+{n+1}, X+{n+2}, X+{n+1,n+2}."""
    model_config = ConfigDict(frozen=True)

    plain: RankCheck
    with_first_tag: RankCheck
    with_second_tag: RankCheck
    with_both_tags: RankCheck

    def checks(self) -> List[RankCheck]:
        return [self.plain, self.with_first_tag, self.with_second_tag, self.with_both_tags]

    @property
    def holds(self) -> bool:
        return all(c.holds for c in self.checks())


class MutualFramingRankProfile(BaseModel):
    """Rank of Q#R at X, at Y and at X+Y, for nonempty X in Q's part and Y in R's part."""
    model_config = ConfigDict(frozen=True)

    left: RankCheck
    right: RankCheck
    both: RankCheck

    def checks(self) -> List[RankCheck]:
        return [self.left, self.right, self.both]

    @property
    def holds(self) -> bool:
        return all(c.holds for c in self.checks())


class ReconstructionStatus(str, Enum):
    ACCEPTED = "accepted"
    REJECTED_CASCADE = "rejected_cascade"
    REJECTED_POST_CHECK = "rejected_post_check"


class ReconstructionOutcome(BaseModel):
    """Result of rebuilding a powerful set from its minimal nonempty members."""
    model_config = ConfigDict(frozen=True)

    status: ReconstructionStatus
    result: Optional[BinarySet] = Field(None, description="The reconstructed set when accepted")
    witness: Optional[int] = Field(None, description="Subset whose running sum was rejected")
    reason: Optional[str] = Field(None, description="Why the post-check failed")

    @property
    def accepted(self) -> bool:
        return self.status == ReconstructionStatus.ACCEPTED


class CanonicalForm(BaseModel):
    """Least relabeling of a set over the permutations allowed by invariant refinement."""
    model_config = ConfigDict(frozen=True)

    order: int
    words: Tuple[int, ...] = Field(..., description="Sorted relabeled words")
    witness: Tuple[int, ...] = Field(..., description="witness[i] = new 1-based position of element i+1")

    def as_set(self) -> BinarySet:
        return BinarySet.trusted(self.order, self.words)


class GrayImage(BaseModel):
    """Binary images of Z4 words, in input order, duplicates kept."""
    model_config = ConfigDict(frozen=True)

    order: int = Field(..., ge=0, description="Binary length, twice the Z4 length")
    words: Tuple[int, ...]

    @property
    def has_duplicates(self) -> bool:
        return len(set(self.words)) != len(self.words)

    def to_binary_set(self) -> BinarySet:
        return BinarySet.of(self.order, self.words)
