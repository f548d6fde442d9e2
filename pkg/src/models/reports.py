"""
Report models for census, conjecture sweeps, diamond families and file checks.
"""

from typing import List, Optional

from pydantic import BaseModel, Field

from .code import BinarySet, ElementType, RankValue


class CensusReport(BaseModel):
    """Isomorphism-class counts of powerful sets of one order."""

    n: int = Field(..., ge=1, description="Order of the censused sets")
    p: int = Field(..., ge=0, description="Isomorphism classes of powerful sets")
    p_nonlinear: int = Field(..., ge=0, description="Isomorphism classes of nonlinear powerful sets")
    classes: Optional[List[BinarySet]] = Field(None, description="Canonical representatives, sorted")
    labeled: Optional[int] = Field(None, description="Labeled powerful sets accepted by reconstruction")
    labeled_linear: Optional[int] = Field(None, description="Labeled linear sets among them")
    antichains: Optional[int] = Field(None, description="Antichains visited (pipeline strategy)")
    rejected: Optional[int] = Field(None, description="Antichains or prefixes rejected by reconstruction")
    strategy: str = Field(..., description="incremental, pipeline or cache")
    workers: int = Field(1, ge=1)
    wall_time_ms: int = Field(0, ge=0)

    @property
    def p_linear(self) -> int:
        return self.p - self.p_nonlinear


class ConjectureReport(BaseModel):
    """Outcome of sweeping one conjecture over census representatives."""

    conjecture: str = Field(..., description="coloop or projection")
    n: int = Field(..., ge=1)
    checked: int = Field(0, ge=0, description="Representatives within the conjecture's scope")
    skipped: int = Field(0, ge=0, description="Representatives outside its scope")
    counterexamples: List[BinarySet] = Field(default_factory=list)
    linear_checked: int = Field(0, ge=0, description="In-scope representatives that are linear")
    star_recoveries: int = Field(0, ge=0, description="Sets rebuilt as T+star from the found coordinate")

    @property
    def holds(self) -> bool:
        return not self.counterexamples


class FamilyReport(BaseModel):
    """Sets produced by closing seeds under diamond rounds, with their checks."""

    seeds: List[BinarySet]
    members: List[BinarySet] = Field(..., description="Members, canonical when the order allows")
    rounds: int = Field(..., ge=1)
    order: int = Field(..., description="Order of every member")
    size: int = Field(..., description="Size of every member")
    round_counts: List[int] = Field(..., description="Member count after each round")
    recursion_holds: bool = Field(..., description="Each round count equals the previous count squared")
    all_powerful: bool
    all_loopless: bool
    all_frameless: bool
    all_nonlinear: bool
    pairwise_nonisomorphic: Optional[bool] = Field(
        None, description="None when neither canonical forms nor fingerprints decide it"
    )
    canonicalized: bool = Field(..., description="Members were replaced by canonical forms")


class ElementReport(BaseModel):
    element: int = Field(..., ge=1)
    kind: ElementType
    partner: Optional[str] = Field(None, description="Near-frame partner as a text row")
    rank: RankValue


class CheckReport(BaseModel):
    """Everything `check` reports about one set."""

    order: int
    size: int
    powerful: bool
    linear: bool
    dim: Optional[int] = None
    failure_subset: Optional[List[int]] = Field(None, description="1-based elements of the first failing X")
    failure_zeros: Optional[int] = None
    elements: List[ElementReport] = Field(default_factory=list)


class GrayMapReport(BaseModel):
    """Binary image of a Z4 code and its powerfulness."""

    order: int
    rows: List[str] = Field(..., description="Images in input order, duplicates kept")
    has_duplicates: bool
    powerful: Optional[bool] = Field(None, description="Set when the image was checked")
    failure_subset: Optional[List[int]] = None
    failure_zeros: Optional[int] = None
