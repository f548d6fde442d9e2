"""Data models for powerful sets."""

from .code import BinarySet, Clutter, ElementKind, ElementType, RankValue, ZetaTable
from .reports import CensusReport, CheckReport, ConjectureReport, ElementReport, FamilyReport, GrayMapReport
from .results import (
    RankCheck,
    BulletRankProfile,
    CanonicalForm,
    DeletionResult,
    ExtensionSpec,
    ExtensionType,
    GrayImage,
    MutualFramingCase,
    MutualFramingRankProfile,
    MutualFramingVerdict,
    PowerFailure,
    ReconstructionOutcome,
    ReconstructionStatus,
)

__all__ = [
    "BinarySet",
    "Clutter",
    "ElementKind",
    "ElementType",
    "RankValue",
    "ZetaTable",
    "CensusReport",
    "CheckReport",
    "ConjectureReport",
    "ElementReport",
    "FamilyReport",
    "GrayMapReport",
    "RankCheck",
    "BulletRankProfile",
    "CanonicalForm",
    "DeletionResult",
    "ExtensionSpec",
    "ExtensionType",
    "GrayImage",
    "MutualFramingCase",
    "MutualFramingRankProfile",
    "MutualFramingVerdict",
    "PowerFailure",
    "ReconstructionOutcome",
    "ReconstructionStatus",
]
