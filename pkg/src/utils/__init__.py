"""Utility functions and helpers."""

from .bits import elements_of, full_mask, is_antichain, mask_of, popcount, text_to_word, word_to_text

__all__ = [
    "elements_of",
    "full_mask",
    "is_antichain",
    "mask_of",
    "popcount",
    "text_to_word",
    "word_to_text",
]
