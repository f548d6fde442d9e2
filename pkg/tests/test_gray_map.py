import pytest

from src.core import count_zero_on, first_failure, is_powerful
from src.exceptions import InvalidDigit, OrderMismatch
from src.utils.bits import mask_of, text_to_word, word_to_text
from src.utils.gray_map import gray_map, gray_word


def test_gray_word():
    assert word_to_text(gray_word([0, 0, 0]), 6) == "000000"
    assert word_to_text(gray_word([0, 1, 3]), 6) == "000110"
    assert word_to_text(gray_word([1, 2, 3]), 6) == "011110"
    assert word_to_text(gray_word([3, 3, 0]), 6) == "101000"


def test_gray_word_rejects_bad_digit():
    with pytest.raises(InvalidDigit):
        gray_word([0, 4, 1])


def test_gray_image_of_z4_code(z4_example):
    image = gray_map(z4_example)
    assert image.order == 6
    assert len(image.words) == 16
    assert not image.has_duplicates
    assert image.words[1] == text_to_word("000110")

    s = image.to_binary_set()
    assert count_zero_on(s, mask_of([1, 3, 5])) == 3
    assert not is_powerful(s)
    failure = first_failure(s)
    assert failure.subset == mask_of([1, 3, 5])
    assert failure.zeros == 3


def test_all_zero_code_is_powerful():
    image = gray_map([[0, 0], [0, 0]])
    assert image.has_duplicates
    assert image.words == (0, 0)
    assert is_powerful(image.to_binary_set())


def test_gray_map_edge_cases():
    assert gray_map([]).order == 0
    with pytest.raises(OrderMismatch):
        gray_map([[0, 1], [0]])
