"""
Text formats for sets, clutters and Z4 codes.

One word per line, written over {0,1} with coordinate 1 leftmost. Blank
lines and lines starting with `#` are ignored. Rows are kept in file order
so that rendering a parsed file reproduces its data lines exactly.
"""

import logging
from pathlib import Path
from typing import List, Optional, Union

from pydantic import BaseModel, Field

from ..exceptions import SetFileError
from ..models.code import BinarySet, Clutter
from .bits import is_antichain, text_to_word

logger = logging.getLogger(__name__)


class SetFile(BaseModel):
    """Parsed data lines of a set or clutter file."""

    order: int = Field(..., ge=0)
    rows: List[str] = Field(default_factory=list, description="Data lines in file order")

    @classmethod
    def from_binary_set(cls, s: BinarySet) -> "SetFile":
        return cls(order=s.order, rows=s.rows())

    @classmethod
    def from_clutter(cls, c: Clutter) -> "SetFile":
        return cls(order=c.order, rows=c.rows())

    def words(self) -> List[int]:
        return [text_to_word(r) for r in self.rows]

    def to_binary_set(self) -> BinarySet:
        return BinarySet.of(self.order, self.words())

    def to_clutter(self) -> Clutter:
        words = self.words()
        if 0 in words:
            raise SetFileError("a clutter cannot contain the zero word")
        if not is_antichain(words):
            raise SetFileError("clutter members must be pairwise incomparable")
        return Clutter.of(self.order, words)

    def render(self) -> str:
        return "".join(f"{r}\n" for r in self.rows)


def parse_set_file(text: str, allow_duplicates: bool = False, order: Optional[int] = None) -> SetFile:
    """
    Parse set-file text.

    Args:
        text: File contents
        allow_duplicates: Keep repeated rows with a warning instead of failing
        order: Expected order; required when the file has no data lines

    Returns:
        SetFile with rows in file order

    Raises:
        SetFileError: On bad characters, unequal lengths, duplicates or no data
    """
    rows: List[str] = []
    seen = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        bad = next((ch for ch in line if ch not in "01"), None)
        if bad is not None:
            raise SetFileError(f"invalid character {bad!r}", lineno)
        expected = order if order is not None else (len(rows[0]) if rows else None)
        if expected is not None and len(line) != expected:
            raise SetFileError(f"row has length {len(line)}, expected {expected}", lineno)
        if line in seen:
            if not allow_duplicates:
                raise SetFileError(f"duplicate row {line}", lineno)
            logger.warning(f"line {lineno}: duplicate row {line}")
        seen.add(line)
        rows.append(line)

    if not rows:
        if order is None:
            raise SetFileError("no data lines")
        return SetFile(order=order, rows=[])
    return SetFile(order=len(rows[0]), rows=rows)


def parse_z4_file(text: str) -> List[List[int]]:
    """Parse one Z4 word per line as digit strings such as `013`."""
    code: List[List[int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if not line.isdigit():
            raise SetFileError(f"invalid Z4 word {line!r}", lineno)
        if code and len(line) != len(code[0]):
            raise SetFileError(f"word has length {len(line)}, expected {len(code[0])}", lineno)
        code.append([int(ch) for ch in line])
    if not code:
        raise SetFileError("no data lines")
    return code


def read_text(path: Union[str, Path]) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as e:
        raise SetFileError(f"cannot read {path}: {e}") from e


def read_binary_set(path: Union[str, Path]) -> BinarySet:
    return parse_set_file(read_text(path)).to_binary_set()


def format_set(s: BinarySet) -> str:
    return SetFile.from_binary_set(s).render()
