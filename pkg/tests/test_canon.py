import random
from itertools import permutations

import pytest

from src.canon import (
    apply_permutation,
    canonical_form,
    canonical_words,
    column_invariants,
    invariant_fingerprint,
    is_isomorphic,
)
from src.exceptions import OrderTooLarge
from src.models.code import BinarySet
from src.ops import contract, permute
from tests.helpers import brute_force_isomorphic, bset, powerful_sets


def _random_set(rng, order):
    size = rng.randint(1, 1 << order)
    return BinarySet.of(order, rng.sample(range(1 << order), size))


def test_column_invariants(smallest_nonlinear):
    assert column_invariants(smallest_nonlinear) == [(2, (1, 2)), (2, (1, 2)), (3, (2, 2))]


def test_canonical_form_is_permutation_invariant():
    rng = random.Random(11)
    for _ in range(200):
        order = rng.randint(1, 6)
        s = _random_set(rng, order)
        perm = list(range(1, order + 1))
        rng.shuffle(perm)
        assert canonical_words(order, s.words) == canonical_words(order, permute(s, perm).words)


def test_witness_reproduces_canonical_set():
    rng = random.Random(5)
    for _ in range(100):
        order = rng.randint(1, 6)
        s = _random_set(rng, order)
        form = canonical_form(s)
        assert sorted(form.witness) == list(range(1, order + 1))
        assert apply_permutation(s, form.witness) == form.as_set()


def test_canonical_form_is_a_relabeling(smallest_nonlinear):
    form = canonical_form(smallest_nonlinear)
    relabelings = {permute(smallest_nonlinear, p).words for p in permutations([1, 2, 3])}
    assert form.words in relabelings


def test_contractions_are_isomorphic(contraction_example):
    a = canonical_form(contract(contraction_example, 1))
    b = canonical_form(contract(contraction_example, 3))
    assert a.words == b.words


def test_is_isomorphic_examples(smallest_nonlinear, even_weight):
    assert is_isomorphic(bset("00", "01"), bset("00", "10"))
    assert is_isomorphic(smallest_nonlinear, smallest_nonlinear)
    assert is_isomorphic(smallest_nonlinear, bset("000", "110", "101", "111"))
    assert not is_isomorphic(smallest_nonlinear, even_weight)
    assert not is_isomorphic(bset("00"), bset("000"))


def test_is_isomorphic_matches_brute_force():
    sets = powerful_sets(3)
    for a in sets:
        for b in sets:
            assert is_isomorphic(a, b) == brute_force_isomorphic(a, b)


def test_fingerprint_is_invariant(duplicating_set):
    perm = [3, 5, 1, 2, 4]
    assert invariant_fingerprint(duplicating_set) == invariant_fingerprint(permute(duplicating_set, perm))


def test_canon_order_cap(caps):
    caps(max_canon_order=3)
    with pytest.raises(OrderTooLarge):
        canonical_form(BinarySet.full_space(4))


def test_canonical_form_with_small_batches(caps, duplicating_set):
    expected = canonical_words(5, duplicating_set.words)
    caps(canon_batch_size=2)
    assert canonical_words(5, permute(duplicating_set, [2, 1, 3, 5, 4]).words) == expected
