"""
Helpers for bitmask words.

A word of order n is an int whose bit i (0-based) is coordinate i+1 of the
ground set. In text, coordinate 1 is the leftmost character.
"""

from typing import Iterable, Iterator, Optional


def full_mask(order: int) -> int:
    return (1 << order) - 1


def popcount(x: int) -> int:
    return x.bit_count()


def is_power_of_two(x: int) -> bool:
    return x > 0 and x & (x - 1) == 0


def exact_log2(x: int) -> Optional[int]:
    """Return log2(x) if x is a power of 2, else None."""
    if not is_power_of_two(x):
        return None
    return x.bit_length() - 1


def set_bit_indices(x: int) -> Iterator[int]:
    """Iterate over the indices of bits set to 1 in `x`, in ascending order."""
    n = 0
    while x > 0:
        if x & 1:
            yield n
        x >>= 1
        n += 1


def mask_of(elements: Iterable[int]) -> int:
    """Mask of a collection of 1-based elements."""
    mask = 0
    for e in elements:
        mask |= 1 << (e - 1)
    return mask


def elements_of(mask: int) -> list:
    """Sorted 1-based elements of a mask."""
    return [i + 1 for i in set_bit_indices(mask)]


def drop_bit(word: int, pos: int) -> int:
    """Remove bit `pos` (0-based), shifting higher bits down."""
    low = word & ((1 << pos) - 1)
    high = word >> (pos + 1)
    return low | (high << pos)


def word_to_text(word: int, order: int) -> str:
    return "".join("1" if (word >> i) & 1 else "0" for i in range(order))


def text_to_word(text: str) -> int:
    word = 0
    for i, ch in enumerate(text):
        if ch == "1":
            word |= 1 << i
        elif ch != "0":
            raise ValueError(f"invalid character {ch!r} in word {text!r}")
    return word


def is_antichain(words: Iterable[int]) -> bool:
    """True iff no word is a subset of another (words assumed distinct)."""
    items = sorted(set(words), key=popcount)
    for i, a in enumerate(items):
        for b in items[i + 1:]:
            if a & b == a:
                return False
    return True
