import pytest

from src.config import settings
from tests.helpers import bset


@pytest.fixture
def smallest_nonlinear():
    return bset("000", "011", "101", "111")


@pytest.fixture
def contraction_example():
    return bset("000", "011", "110", "111")


@pytest.fixture
def even_weight():
    return bset("000", "011", "101", "110")


@pytest.fixture
def duplicating_set():
    return bset("00000", "00111", "01011", "01111", "10101", "10111", "11010", "11011")


@pytest.fixture
def size_five_set():
    return bset("0000", "0111", "1011", "1101", "1111")


@pytest.fixture
def z4_example():
    rows = [
        "000", "013", "022", "031", "101", "110", "123", "132",
        "202", "211", "220", "233", "303", "312", "321", "330",
    ]
    return [[int(ch) for ch in r] for r in rows]


@pytest.fixture
def caps(monkeypatch):
    """Override settings caps for one test: caps(max_canon_order=3)."""

    def apply(**overrides):
        for name, value in overrides.items():
            monkeypatch.setattr(settings, name, value)

    return apply
