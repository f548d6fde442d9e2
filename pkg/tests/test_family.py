import pytest

from src.canon import is_isomorphic
from src.core import is_linear, is_powerful
from src.exceptions import OrderTooLarge, SeedPreconditionViolated
from src.models.code import BinarySet
from src.models.results import ExtensionSpec, ExtensionType
from src.ops import delete, disjunctive_closure, extend
from src.services.family_service import (
    CLOSURE_SEED,
    DUPLICATING_SEED,
    ORDER5_SEEDS,
    check_seeds,
    diamond_family,
    is_frameless,
    is_loopless,
    lift_seeds,
)
from tests.helpers import bset


def test_seeds_satisfy_preconditions():
    assert check_seeds(ORDER5_SEEDS) == 5
    for seed in ORDER5_SEEDS:
        assert is_powerful(seed)
        assert is_loopless(seed) and is_frameless(seed)
        assert not is_linear(seed)
    assert not is_isomorphic(CLOSURE_SEED, DUPLICATING_SEED)


def test_seed_constants(duplicating_set):
    assert CLOSURE_SEED == disjunctive_closure(bset("00011", "01100", "10101"))
    assert DUPLICATING_SEED == duplicating_set
    assert all(delete(DUPLICATING_SEED, e).had_duplicates for e in range(1, 6))


def test_one_round():
    report = diamond_family(ORDER5_SEEDS)
    assert len(report.members) == 4
    assert report.round_counts == [4]
    assert (report.order, report.size) == (8, 64)
    assert report.recursion_holds
    assert report.all_powerful and report.all_loopless and report.all_frameless
    assert report.all_nonlinear
    assert report.canonicalized
    assert report.pairwise_nonisomorphic is True


def test_single_seed():
    report = diamond_family([CLOSURE_SEED])
    assert len(report.members) == 1
    assert report.pairwise_nonisomorphic is True


@pytest.mark.slow
def test_two_rounds():
    report = diamond_family(ORDER5_SEEDS, rounds=2)
    assert report.round_counts == [4, 16]
    assert report.recursion_holds
    assert (report.order, report.size) == (11, 512)
    assert not report.canonicalized
    assert report.all_powerful and report.all_loopless and report.all_frameless
    assert report.all_nonlinear
    assert report.pairwise_nonisomorphic is not False


def test_family_order_cap():
    with pytest.raises(OrderTooLarge):
        diamond_family(ORDER5_SEEDS, rounds=3)


def test_rounds_must_be_positive():
    with pytest.raises(ValueError):
        diamond_family(ORDER5_SEEDS, rounds=0)
    with pytest.raises(ValueError):
        diamond_family([])


def _violation(seeds):
    with pytest.raises(SeedPreconditionViolated) as exc:
        check_seeds(seeds)
    return exc.value


def test_seed_violations(smallest_nonlinear):
    assert _violation([CLOSURE_SEED, smallest_nonlinear]).seed_index == 1
    assert _violation([BinarySet.full_space(5)]).predicate == "of size 2^3"

    not_powerful = bset("00000", "10000", "01000", "00100", "00010", "00001", "11000", "11111")
    assert _violation([not_powerful]).predicate == "powerful"

    even = bset("0000", "1100", "1010", "1001", "0110", "0101", "0011", "1111")
    looped = extend(even, ExtensionSpec(kind=ExtensionType.LOOP))
    assert _violation([looped]).predicate == "loopless"

    framed = extend(even, ExtensionSpec(kind=ExtensionType.FRAME))
    assert _violation([framed]).predicate == "frameless"


@pytest.mark.slow
def test_lifted_seeds():
    lifted = lift_seeds(ORDER5_SEEDS, 6)
    assert [(s.order, s.size) for s in lifted] == [(6, 16), (6, 16)]
    report = diamond_family(lifted)
    assert report.order == 9
    assert report.all_powerful and report.all_frameless
    with pytest.raises(ValueError):
        lift_seeds(ORDER5_SEEDS, 4)
