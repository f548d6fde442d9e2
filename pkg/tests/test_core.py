import math
import random

import pytest

from src.core import (
    classify_element,
    count_zero_on,
    dim,
    first_failure,
    gf2_rank,
    is_coloop,
    is_frame,
    is_linear,
    is_loop,
    is_powerful,
    is_star,
    near_frame_partner,
    rank,
    rank_table,
    zeta_transform,
)
from src.exceptions import IndexOutOfRange, NotPowerOfTwoSize, OrderTooLarge, UndefinedRank
from src.models.code import BinarySet, ElementType
from src.models.results import ExtensionSpec, ExtensionType
from src.ops import extend
from src.utils.bits import mask_of, text_to_word
from tests.helpers import (
    bset,
    elimination_rank,
    naive_is_powerful,
    naive_zero_count,
    powerful_sets,
    zero_containing_sets,
)


def test_zeta_matches_naive_counts():
    rng = random.Random(7)
    for order in range(1, 7):
        for _ in range(20):
            words = rng.sample(range(1 << order), rng.randint(1, 1 << order))
            s = BinarySet.of(order, words)
            table = zeta_transform(s)
            for x in range(1 << order):
                assert table.zero_on(x) == naive_zero_count(s, x)


def test_count_zero_on(contraction_example):
    assert count_zero_on(contraction_example, 0) == 4
    assert count_zero_on(contraction_example, mask_of([1])) == 2
    # only 000 avoids coordinate 2
    assert count_zero_on(contraction_example, mask_of([2])) == 1
    assert count_zero_on(contraction_example, mask_of([3])) == 2
    assert count_zero_on(contraction_example, mask_of([1, 2, 3])) == 1


def test_count_zero_on_rejects_out_of_range_subset(contraction_example):
    with pytest.raises(IndexOutOfRange):
        count_zero_on(contraction_example, 1 << 3)


def test_powerful_examples(smallest_nonlinear, contraction_example, even_weight, size_five_set):
    assert is_powerful(smallest_nonlinear)
    assert is_powerful(contraction_example)
    assert is_powerful(even_weight)
    assert is_powerful(BinarySet.full_space(3))
    assert is_powerful(BinarySet.zero_only(3))
    assert not is_powerful(size_five_set)
    assert not is_powerful(bset("011", "101"))


def test_is_powerful_agrees_with_definition():
    for order in range(1, 4):
        for s in zero_containing_sets(order):
            assert is_powerful(s) == naive_is_powerful(s)


def test_first_failure(size_five_set, smallest_nonlinear):
    failure = first_failure(size_five_set)
    assert failure.subset == 0
    assert failure.zeros == 5
    assert first_failure(smallest_nonlinear) is None


def test_first_failure_prefers_smallest_subset():
    s = bset("000", "100", "010", "001")
    failure = first_failure(s)
    assert failure.subset == mask_of([1])
    assert failure.zeros == 3


def test_gf2_rank():
    assert gf2_rank([]) == 0
    assert gf2_rank([0]) == 0
    assert gf2_rank(BinarySet.from_rows(["011", "101", "110"]).words) == 2
    assert gf2_rank(range(1, 16)) == 4


def test_is_linear(smallest_nonlinear, even_weight):
    assert is_linear(even_weight)
    assert not is_linear(smallest_nonlinear)
    assert not is_linear(bset("011", "101", "110"))
    assert is_linear(BinarySet.zero_only(2))


def test_linear_sets_are_powerful():
    for order in range(1, 4):
        for s in zero_containing_sets(order):
            if is_linear(s):
                assert is_powerful(s)


def test_dim(smallest_nonlinear, size_five_set):
    assert dim(smallest_nonlinear) == 2
    assert dim(BinarySet.full_space(4)) == 4
    with pytest.raises(NotPowerOfTwoSize):
        dim(size_five_set)


def test_rank_of_linear_set_is_rowspace_rank(even_weight):
    assert rank(even_weight, mask_of([1])).exact_log2 == 1
    assert rank(even_weight, mask_of([1, 2])).exact_log2 == 2
    assert rank(even_weight, 0).exact_log2 == 0


def test_rank_is_exact_on_powerful_sets():
    for order in range(1, 4):
        for s in powerful_sets(order):
            for x in range(1 << order):
                assert rank(s, x).is_exact


def test_rank_is_monotone_on_powerful_sets():
    for order in range(1, 5):
        for s in powerful_sets(order):
            values = [rank(s, x).exact_log2 for x in range(1 << order)]
            assert values[0] == 0
            for x in range(1 << order):
                for y in range(1 << order):
                    if x & y == x:
                        assert values[x] <= values[y]


def test_rank_of_linear_sets_matches_generator_columns():
    for order in range(1, 5):
        for s in powerful_sets(order):
            if not is_linear(s):
                continue
            generators = [w for w in s.words if w]
            for x in range(1 << order):
                expected = elimination_rank(w & x for w in generators)
                assert rank(s, x).exact_log2 == expected


def test_rank_of_each_extension_element():
    for order in range(1, 4):
        for t in powerful_sets(order):
            d = dim(t)
            new = 1 << order
            assert rank(extend(t, ExtensionSpec(kind=ExtensionType.LOOP)), new).exact_log2 == 0
            assert rank(extend(t, ExtensionSpec(kind=ExtensionType.COLOOP)), new).exact_log2 == 1
            assert rank(extend(t, ExtensionSpec(kind=ExtensionType.FRAME)), new).exact_log2 == d
            assert rank(extend(t, ExtensionSpec(kind=ExtensionType.STAR)), new).exact_log2 == order - d
            for v in t.words[1:]:
                s = extend(t, ExtensionSpec(kind=ExtensionType.NEAR_FRAME, partner=v))
                assert rank(s, new).exact_log2 == d - 1


def test_inexact_rank():
    value = rank(bset("000", "100", "010", "001"), mask_of([1]))
    assert not value.is_exact
    assert value.approximate() == pytest.approx(math.log2(4 / 3))


def test_rank_requires_zero_word():
    with pytest.raises(UndefinedRank):
        rank(bset("011", "101"), 0)


def test_rank_table(contraction_example):
    table = rank_table(contraction_example)
    assert [r.exact_log2 for r in table] == [1, 2, 1]


def test_classify_frame_and_ordinary(smallest_nonlinear):
    assert classify_element(bset("000", "111"), 1).kind == ElementType.FRAME
    assert classify_element(smallest_nonlinear, 1).kind == ElementType.ORDINARY
    assert classify_element(smallest_nonlinear, 3).kind == ElementType.FRAME


def test_classify_two_word_repetition_is_frame():
    # {00, 11} satisfies both frame and star; frame wins
    assert classify_element(bset("00", "11"), 2).kind == ElementType.FRAME


def test_classify_loop_and_coloop(smallest_nonlinear):
    looped = extend(smallest_nonlinear, ExtensionSpec(kind=ExtensionType.LOOP))
    assert classify_element(looped, 4).kind == ElementType.LOOP
    colooped = extend(smallest_nonlinear, ExtensionSpec(kind=ExtensionType.COLOOP))
    assert classify_element(colooped, 4).kind == ElementType.COLOOP
    assert classify_element(bset("00", "01"), 2).kind == ElementType.COLOOP


def test_classify_near_frame():
    s = bset("0000", "0110", "1011", "1111")
    kind = classify_element(s, 4)
    assert kind.kind == ElementType.NEAR_FRAME
    assert kind.partner == text_to_word("0110")


def test_near_frame_needs_injective_deletion(contraction_example):
    # element 1 is zero only on 000 and 011, but deleting it merges 011 and 111
    assert near_frame_partner(contraction_example, 1) is None
    assert classify_element(contraction_example, 1).kind == ElementType.ORDINARY


def test_classify_star(smallest_nonlinear):
    s = extend(smallest_nonlinear, ExtensionSpec(kind=ExtensionType.STAR))
    assert s.size == 8
    assert classify_element(s, 4).kind == ElementType.STAR


def test_element_predicates_overlap():
    repetition = bset("00", "11")
    assert is_frame(repetition, 2) and is_star(repetition, 2)
    assert not is_loop(repetition, 2)
    assert not is_coloop(repetition, 2)

    s = bset("0000", "0110", "1011", "1111")
    assert near_frame_partner(s, 4) == text_to_word("0110")
    assert not is_frame(s, 4)
    assert is_loop(bset("00", "10"), 2)
    assert is_coloop(bset("00", "01"), 2)


def test_classify_rejects_bad_element(smallest_nonlinear):
    with pytest.raises(IndexOutOfRange):
        classify_element(smallest_nonlinear, 0)
    with pytest.raises(IndexOutOfRange):
        classify_element(smallest_nonlinear, 4)


def test_zeta_order_cap(caps):
    caps(max_zeta_order=3)
    with pytest.raises(OrderTooLarge):
        is_powerful(BinarySet.full_space(4))
