"""
Gray map from Z4 words to binary words: 0 -> 00, 1 -> 01, 2 -> 11, 3 -> 10.

Digit j of a Z4 word (1-based) becomes coordinates 2j-1 and 2j.
"""

from typing import Sequence

from ..exceptions import InvalidDigit, OrderMismatch
from ..models.results import GrayImage

# (coordinate 2j-1, coordinate 2j) for each digit
GRAY_PAIRS = {0: (0, 0), 1: (0, 1), 2: (1, 1), 3: (1, 0)}


def gray_word(digits: Sequence[int]) -> int:
    word = 0
    for j, d in enumerate(digits):
        if d not in GRAY_PAIRS:
            raise InvalidDigit(f"digit {d!r} at position {j + 1} is not in 0..3")
        first, second = GRAY_PAIRS[d]
        word |= (first << (2 * j)) | (second << (2 * j + 1))
    return word


def gray_map(code: Sequence[Sequence[int]]) -> GrayImage:
    """Map every Z4 word, keeping input order and duplicates."""
    if not code:
        return GrayImage(order=0, words=())
    length = len(code[0])
    if any(len(word) != length for word in code):
        raise OrderMismatch("Z4 words must all have the same length")
    return GrayImage(order=2 * length, words=tuple(gray_word(word) for word in code))
