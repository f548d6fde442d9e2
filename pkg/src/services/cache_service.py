"""
Census cache files.

Format: a header line `# order=<n> p=<p> pnl=<p_nonlinear>` followed by one
canonical representative per line, its rows separated by single spaces.
Every representative is re-verified when the file is read back.
"""

import logging
import re
from pathlib import Path
from typing import List, Optional, Union

from ..canon import canonical_words
from ..core import is_linear, is_powerful
from ..exceptions import CacheMismatch, CacheOrderMismatch
from ..models.code import BinarySet
from ..models.reports import CensusReport
from ..utils.bits import text_to_word

logger = logging.getLogger(__name__)

HEADER = re.compile(r"^# order=(\d+) p=(\d+) pnl=(\d+)$")


def format_cache(report: CensusReport) -> str:
    if report.classes is None:
        raise ValueError("census report has no representatives to cache")
    lines = [f"# order={report.n} p={report.p} pnl={report.p_nonlinear}"]
    lines.extend(" ".join(s.rows()) for s in report.classes)
    return "\n".join(lines) + "\n"


def parse_cache(text: str, order: int) -> CensusReport:
    """Parse and verify cache text; raises CacheMismatch on any inconsistency."""
    lines = text.splitlines()
    if not lines:
        raise CacheMismatch("cache file is empty")
    header = HEADER.match(lines[0].strip())
    if not header:
        raise CacheMismatch(f"bad header {lines[0]!r}")
    n, p, pnl = (int(g) for g in header.groups())
    if n != order:
        raise CacheOrderMismatch(n, order)

    classes: List[BinarySet] = []
    seen = set()
    nonlinear = 0
    for lineno, line in enumerate(lines[1:], start=2):
        rows = line.split()
        if not rows:
            continue
        if any(len(r) != n for r in rows):
            raise CacheMismatch(f"line {lineno}: row length differs from order {n}")
        try:
            s = BinarySet.of(n, (text_to_word(r) for r in rows))
        except ValueError as e:
            raise CacheMismatch(f"line {lineno}: {e}") from e
        if s.size != len(rows) or s.words in seen:
            raise CacheMismatch(f"line {lineno}: duplicate row or representative")
        if not is_powerful(s):
            raise CacheMismatch(f"line {lineno}: representative is not powerful")
        if canonical_words(n, s.words) != s.words:
            raise CacheMismatch(f"line {lineno}: representative is not canonical")
        seen.add(s.words)
        classes.append(s)
        nonlinear += not is_linear(s)

    if len(classes) != p or nonlinear != pnl:
        raise CacheMismatch(
            f"header claims p={p} pnl={pnl}, body has p={len(classes)} pnl={nonlinear}"
        )
    return CensusReport(n=n, p=p, p_nonlinear=pnl, classes=classes, strategy="cache")


class CacheService:
    """Reads and writes census cache files."""

    def __init__(self, path: Union[str, Path]):
        self.path = Path(path)

    def load(self, order: int) -> Optional[CensusReport]:
        """
        Load a verified census report.

        Returns:
            The cached report, or None when no cache file exists

        Raises:
            CacheOrderMismatch: The file holds another order
            CacheMismatch: The file exists but fails verification
        """
        if not self.path.exists():
            logger.info(f"No census cache at {self.path}")
            return None
        report = parse_cache(self.path.read_text(encoding="utf-8"), order)
        logger.info(f"Census cache hit: {self.path} (order {order}, p={report.p})")
        return report

    def save(self, report: CensusReport) -> None:
        try:
            self.path.parent.mkdir(parents=True, exist_ok=True)
            self.path.write_text(format_cache(report), encoding="utf-8")
            logger.info(f"Wrote census cache {self.path} ({report.p} representatives)")
        except Exception as e:
            logger.error(f"Failed to write census cache {self.path}: {e}")
            raise
