"""
Exhaustive checks of two open statements over census representatives.

coloop      every powerful set containing a weight-1 word has a coloop
projection  every powerful set of order n and size 2^(n-1) has a coordinate
            whose deletion is injective (so the projection is all of F_2^(n-1))

Neither statement is assumed; failures are collected as counterexamples.
"""

import logging
from typing import Optional

from ..core import is_coloop, is_linear
from ..models.code import BinarySet
from ..models.reports import ConjectureReport
from ..models.results import ExtensionSpec, ExtensionType
from ..ops import contract, delete, extend, move_to_last
from ..utils.bits import popcount
from .census_service import CensusService

logger = logging.getLogger(__name__)


def find_coloop(t: BinarySet) -> Optional[int]:
    """Smallest element that is a coloop of T, or None."""
    for e in range(1, t.order + 1):
        if is_coloop(t, e):
            return e
    return None


def find_injective_coordinate(s: BinarySet) -> Optional[int]:
    """Smallest coordinate whose deletion merges no two words, or None."""
    for e in range(1, s.order + 1):
        if not delete(s, e).had_duplicates:
            return e
    return None


def recover_star_base(s: BinarySet, element: int) -> BinarySet:
    """T with T+star equal to S relabeled so that `element` is last."""
    return contract(s, element)


def is_star_recovery(s: BinarySet, element: int) -> bool:
    t = recover_star_base(s, element)
    return extend(t, ExtensionSpec(kind=ExtensionType.STAR)).words == move_to_last(s, element).words


class ConjectureService:
    """Runs conjecture sweeps over census representatives."""

    def __init__(self, census_service: Optional[CensusService] = None):
        self.census_service = census_service or CensusService()

    def _representatives(self, n: int):
        return self.census_service.run(n, keep_representatives=True).classes

    def check_coloop(self, n: int) -> ConjectureReport:
        report = ConjectureReport(conjecture="coloop", n=n)
        for t in self._representatives(n):
            if not any(popcount(w) == 1 for w in t.words):
                report.skipped += 1
                continue
            report.checked += 1
            report.linear_checked += is_linear(t)
            if find_coloop(t) is None:
                logger.warning(f"Coloop counterexample at order {n}: {t}")
                report.counterexamples.append(t)
        logger.info(
            f"Coloop sweep order {n}: {report.checked} checked, "
            f"{len(report.counterexamples)} counterexamples"
        )
        return report

    def check_projection(self, n: int) -> ConjectureReport:
        if n < 2:
            raise ValueError("the projection sweep needs order at least 2")
        report = ConjectureReport(conjecture="projection", n=n)
        half = 1 << (n - 1)
        for s in self._representatives(n):
            if s.size != half:
                report.skipped += 1
                continue
            report.checked += 1
            report.linear_checked += is_linear(s)
            e = find_injective_coordinate(s)
            if e is None:
                logger.warning(f"Projection counterexample at order {n}: {s}")
                report.counterexamples.append(s)
                continue
            report.star_recoveries += is_star_recovery(s, e)
        logger.info(
            f"Projection sweep order {n}: {report.checked} checked, "
            f"{len(report.counterexamples)} counterexamples, {report.star_recoveries} star recoveries"
        )
        return report


def check_conjecture_coloop(n: int, census_service: Optional[CensusService] = None) -> ConjectureReport:
    return ConjectureService(census_service).check_coloop(n)


def check_conjecture_projection(n: int, census_service: Optional[CensusService] = None) -> ConjectureReport:
    return ConjectureService(census_service).check_projection(n)
