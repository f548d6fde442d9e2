import pytest

from src.exceptions import SetFileError
from src.models.code import Clutter
from src.utils.setfile import (
    SetFile,
    format_set,
    parse_set_file,
    parse_z4_file,
    read_binary_set,
)
from tests.helpers import bset


def test_parse_and_render():
    text = "# smallest nonlinear\n000\n011\n\n101\n111\n"
    parsed = parse_set_file(text)
    assert parsed.order == 3
    assert parsed.rows == ["000", "011", "101", "111"]
    assert parsed.to_binary_set() == bset("000", "011", "101", "111")
    assert parsed.render() == "000\n011\n101\n111\n"


def test_format_set_orders_rows_by_word():
    # coordinate 1 is the lowest bit, so 100 sorts before 010
    assert format_set(bset("010", "000", "100")) == "000\n100\n010\n"


@pytest.mark.parametrize(
    "text,line",
    [
        ("000\n0a1\n", 2),
        ("000\n01\n", 2),
        ("000\n011\n000\n", 3),
    ],
)
def test_parse_errors_carry_line_numbers(text, line):
    with pytest.raises(SetFileError) as exc:
        parse_set_file(text)
    assert exc.value.line == line
    assert str(exc.value).startswith(f"line {line}: ")


def test_duplicates_can_be_allowed():
    parsed = parse_set_file("00\n11\n11\n", allow_duplicates=True)
    assert parsed.rows == ["00", "11", "11"]
    assert parsed.to_binary_set().size == 2


def test_empty_file():
    with pytest.raises(SetFileError):
        parse_set_file("# nothing here\n")
    parsed = parse_set_file("", order=4)
    assert parsed.order == 4
    assert parsed.to_clutter() == Clutter.of(4, [])


def test_clutter_files():
    c = parse_set_file("011\n101\n").to_clutter()
    assert c.rows() == ["101", "011"]
    assert SetFile.from_clutter(c).to_clutter() == c
    with pytest.raises(SetFileError):
        parse_set_file("000\n011\n").to_clutter()
    with pytest.raises(SetFileError):
        parse_set_file("010\n011\n").to_clutter()


def test_parse_z4_file():
    assert parse_z4_file("013\n# comment\n330\n") == [[0, 1, 3], [3, 3, 0]]
    with pytest.raises(SetFileError):
        parse_z4_file("01x\n")
    with pytest.raises(SetFileError):
        parse_z4_file("013\n01\n")
    with pytest.raises(SetFileError):
        parse_z4_file("")


def test_read_binary_set(tmp_path):
    path = tmp_path / "s.txt"
    path.write_text("00\n11\n")
    assert read_binary_set(path) == bset("00", "11")
    with pytest.raises(SetFileError):
        read_binary_set(tmp_path / "missing.txt")
