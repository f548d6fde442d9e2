"""
Core data models: binary sets, zeta tables, rank values, element kinds and clutters.
"""

import math
from enum import Enum
from typing import FrozenSet, Iterable, List, Optional, Tuple

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, model_validator

from ..utils.bits import full_mask, is_antichain, text_to_word, word_to_text


class BinarySet(BaseModel):
    """A set of binary words of a fixed order, stored in ascending integer order."""
    model_config = ConfigDict(frozen=True)

    order: int = Field(..., ge=0, description="Ground-set size n")
    words: Tuple[int, ...] = Field(..., description="Strictly increasing bitmask words")

    @model_validator(mode="after")
    def _check_words(self) -> "BinarySet":
        limit = 1 << self.order
        previous = -1
        for w in self.words:
            if w < 0 or w >= limit:
                raise ValueError(f"word {w} does not fit in order {self.order}")
            if w <= previous:
                raise ValueError("words must be strictly increasing")
            previous = w
        return self

    @classmethod
    def of(cls, order: int, words: Iterable[int]) -> "BinarySet":
        """Build from any iterable of words, sorting and collapsing duplicates."""
        return cls(order=order, words=tuple(sorted(set(words))))

    @classmethod
    def trusted(cls, order: int, words: Iterable[int]) -> "BinarySet":
        """Build without validation; `words` must already be sorted and distinct."""
        return cls.model_construct(order=order, words=tuple(words))

    @classmethod
    def from_rows(cls, rows: List[str], order: Optional[int] = None) -> "BinarySet":
        """Build from text rows such as ["000", "011"]; leftmost character is coordinate 1."""
        if order is None:
            order = len(rows[0]) if rows else 0
        if any(len(r) != order for r in rows):
            raise ValueError("all rows must have the same length as the order")
        return cls.of(order, (text_to_word(r) for r in rows))

    @classmethod
    def full_space(cls, order: int) -> "BinarySet":
        return cls.trusted(order, range(1 << order))

    @classmethod
    def zero_only(cls, order: int) -> "BinarySet":
        return cls.trusted(order, (0,))

    @property
    def size(self) -> int:
        return len(self.words)

    @property
    def contains_zero(self) -> bool:
        return bool(self.words) and self.words[0] == 0

    @property
    def all_ones(self) -> int:
        return full_mask(self.order)

    @property
    def word_set(self) -> FrozenSet[int]:
        return frozenset(self.words)

    def contains(self, word: int) -> bool:
        return word in self.word_set

    def rows(self) -> List[str]:
        return [word_to_text(w, self.order) for w in self.words]

    def __str__(self) -> str:
        return "{" + ", ".join(self.rows()) + "}"


class ZetaTable(BaseModel):
    """counts[M] = number of members of S contained in mask M."""
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    order: int = Field(..., ge=0, description="Ground-set size n")
    counts: np.ndarray = Field(..., description="Array of 2^n nonnegative counts")

    def zero_on(self, subset: int) -> int:
        """Number of members that are zero on every coordinate of `subset`."""
        return int(self.counts[full_mask(self.order) ^ subset])


class RankValue(BaseModel):
    """Rank of a subset as the exact pair (|S|, members zero on X)."""
    model_config = ConfigDict(frozen=True)

    total: int = Field(..., ge=0, description="|S|")
    zeros: int = Field(..., ge=1, description="Members zero on X")
    exact_log2: Optional[int] = Field(None, ge=0, description="log2(total/zeros) when exact")

    @property
    def is_exact(self) -> bool:
        return self.exact_log2 is not None

    def approximate(self) -> float:
        return math.log2(self.total / self.zeros)


class ElementType(str, Enum):
    LOOP = "loop"
    COLOOP = "coloop"
    FRAME = "frame"
    NEAR_FRAME = "near_frame"
    STAR = "star"
    ORDINARY = "ordinary"


class ElementKind(BaseModel):
    """Classification of one ground-set element."""
    model_config = ConfigDict(frozen=True)

    kind: ElementType = Field(..., description="First matching special-element type")
    partner: Optional[int] = Field(None, description="Nonzero partner word for a near-frame")


class Clutter(BaseModel):
    """An antichain of nonzero words."""
    model_config = ConfigDict(frozen=True)

    order: int = Field(..., ge=0, description="Ground-set size n")
    members: Tuple[int, ...] = Field(..., description="Sorted nonzero pairwise-incomparable words")

    @model_validator(mode="after")
    def _check_members(self) -> "Clutter":
        limit = 1 << self.order
        if any(w <= 0 or w >= limit for w in self.members):
            raise ValueError("clutter members must be nonzero words within the order")
        if list(self.members) != sorted(set(self.members)):
            raise ValueError("clutter members must be strictly increasing")
        if not is_antichain(self.members):
            raise ValueError("clutter members must form an antichain")
        return self

    @classmethod
    def of(cls, order: int, members: Iterable[int]) -> "Clutter":
        return cls(order=order, members=tuple(sorted(set(members))))

    @classmethod
    def trusted(cls, order: int, members: Iterable[int]) -> "Clutter":
        return cls.model_construct(order=order, members=tuple(members))

    def rows(self) -> List[str]:
        return [word_to_text(w, self.order) for w in self.members]
