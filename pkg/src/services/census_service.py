"""
Isomorph-free census of powerful sets of a given order.

Every powerful set is rebuilt from its clutter of minimal nonempty members,
so the census walks all clutters, keeps those that reconstruct, and
deduplicates the results by canonical form. Two strategies are available:

    incremental  clutter choice interleaved with reconstruction, pruning
                 at the first rejected subset (partitioned by which
                 singletons are in the clutter)
    pipeline     every antichain enumerated, then `reconstruct` on each
                 (partitioned by the smallest member)

Partitions run in worker processes; their class maps are merged in a fixed
order, so the report does not depend on the worker count.
"""

import logging
import time
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path
from typing import Dict, List, Optional, Tuple, Union

from ..canon import canonical_words
from ..clutter import enumerate_antichains, reconstruct, walk_powerful_supports
from ..config import settings
from ..core import is_linear, is_powerful
from ..exceptions import CacheMismatch, CacheOrderMismatch, OrderTooLarge
from ..models.code import BinarySet, Clutter
from ..models.reports import CensusReport
from .cache_service import CacheService

logger = logging.getLogger(__name__)

STRATEGIES = ("incremental", "pipeline")

# (p, p_nonlinear) for orders 1..6
KNOWN_COUNTS: Dict[int, Tuple[int, int]] = {
    1: (2, 0),
    2: (4, 0),
    3: (9, 1),
    4: (25, 9),
    5: (102, 70),
    6: (900, 832),
}

ClassMap = Dict[Tuple[int, ...], bool]


def gaussian_binomial(n: int, k: int) -> int:
    """Number of k-dimensional subspaces of F_2^n."""
    num, den = 1, 1
    for i in range(k):
        num *= (1 << (n - i)) - 1
        den *= (1 << (i + 1)) - 1
    return num // den


def subspace_count(n: int) -> int:
    return sum(gaussian_binomial(n, k) for k in range(n + 1))


def partition_keys(order: int) -> List[int]:
    """Keys splitting the search: singleton patterns, or smallest members with 0 for the empty clutter."""
    return list(range(1 << order))


def census_partition(order: int, strategy: str, keys: List[int]) -> Tuple[ClassMap, Dict[str, int]]:
    """
    Census one share of the search space.

    Runs in worker processes, so it is a plain top-level function returning
    plain data: a map from canonical words to linearity, plus counters.
    """
    classes: ClassMap = {}
    counters = {"labeled": 0, "labeled_linear": 0, "antichains": 0, "rejected": 0}

    def record(s: BinarySet) -> None:
        linear = is_linear(s)
        counters["labeled"] += 1
        counters["labeled_linear"] += linear
        classes.setdefault(canonical_words(order, s.words), linear)

    if strategy == "incremental":
        def visit_support(members: Tuple[int, ...], support: Tuple[int, ...]) -> None:
            s = BinarySet.trusted(order, support)
            if is_powerful(s):
                record(s)
            else:
                counters["rejected"] += 1

        for pattern in keys:
            _, pruned = walk_powerful_supports(order, visit_support, singleton_pattern=pattern)
            counters["rejected"] += pruned
        return classes, counters

    def visit_clutter(c: Clutter) -> None:
        outcome = reconstruct(c)
        if outcome.accepted:
            record(outcome.result)
        else:
            counters["rejected"] += 1

    for key in keys:
        if key == 0:
            counters["antichains"] += enumerate_antichains(order, visit_clutter, first_words=[], include_empty=True)
        else:
            counters["antichains"] += enumerate_antichains(order, visit_clutter, first_words=[key], include_empty=False)
    return classes, counters


class CensusService:
    """Runs censuses with a configured strategy, worker count and optional cache."""

    def __init__(
        self,
        workers: Optional[int] = None,
        strategy: Optional[str] = None,
        cache_path: Optional[Union[str, Path]] = None,
    ):
        self.workers = workers or settings.census_workers
        self.strategy = strategy or settings.census_strategy
        if self.strategy not in STRATEGIES:
            raise ValueError(f"unknown census strategy {self.strategy!r}; expected one of {STRATEGIES}")
        if self.workers < 1:
            raise ValueError("workers must be at least 1")
        self.cache = CacheService(cache_path) if cache_path else None

    def run(self, n: int, keep_representatives: bool = False) -> CensusReport:
        """
        Count isomorphism classes of powerful sets of order n.

        Args:
            n: Order, 1 <= n <= the configured census cap
            keep_representatives: Include the sorted canonical representatives

        Returns:
            CensusReport with p, p_nonlinear and the enumeration counters
        """
        if n < 1:
            raise ValueError("census order must be at least 1")
        if n > settings.max_census_order:
            raise OrderTooLarge(n, settings.max_census_order, "census")

        if self.cache:
            try:
                cached = self.cache.load(n)
                if cached is not None:
                    return cached if keep_representatives else cached.model_copy(update={"classes": None})
            except CacheOrderMismatch:
                logger.error(f"Census cache {self.cache.path} belongs to another order; leaving it untouched")
                raise
            except CacheMismatch as e:
                logger.warning(f"Census cache {self.cache.path} rejected, recomputing: {e}")

        start = time.perf_counter()
        try:
            classes, counters = self._run_partitions(n)
        except Exception as e:
            logger.error(f"Census of order {n} failed: {e}")
            raise

        representatives = [BinarySet.trusted(n, words) for words in sorted(classes, key=lambda w: (len(w), w))]
        pipeline = self.strategy == "pipeline"
        report = CensusReport(
            n=n,
            p=len(classes),
            p_nonlinear=sum(1 for linear in classes.values() if not linear),
            classes=representatives,
            labeled=counters["labeled"],
            labeled_linear=counters["labeled_linear"],
            antichains=counters["antichains"] if pipeline else None,
            rejected=counters["rejected"],
            strategy=self.strategy,
            workers=self.workers,
            wall_time_ms=int((time.perf_counter() - start) * 1000),
        )
        logger.info(
            f"Census order {n}: p={report.p} pnl={report.p_nonlinear} "
            f"({self.strategy}, {self.workers} workers, {report.wall_time_ms} ms)"
        )
        if self.cache:
            self.cache.save(report)
        return report if keep_representatives else report.model_copy(update={"classes": None})

    def _run_partitions(self, n: int) -> Tuple[ClassMap, Dict[str, int]]:
        keys = partition_keys(n)
        shares = [keys[i::self.workers] for i in range(self.workers)]
        shares = [share for share in shares if share]

        if len(shares) == 1:
            results = [census_partition(n, self.strategy, shares[0])]
        else:
            with ProcessPoolExecutor(max_workers=len(shares)) as pool:
                results = list(pool.map(census_partition, [n] * len(shares), [self.strategy] * len(shares), shares))

        classes: ClassMap = {}
        totals = {"labeled": 0, "labeled_linear": 0, "antichains": 0, "rejected": 0}
        for part_classes, part_counters in results:
            for words, linear in part_classes.items():
                classes.setdefault(words, linear)
            for name, value in part_counters.items():
                totals[name] += value
        return classes, totals


def census(
    n: int,
    keep_representatives: bool = False,
    workers: Optional[int] = None,
    strategy: Optional[str] = None,
) -> CensusReport:
    return CensusService(workers=workers, strategy=strategy).run(n, keep_representatives)
