"""Spectral-data file parsing."""

from fractions import Fraction as F

import pytest

from fermispec import (
    EmptySpectrumError,
    INFINITE,
    SpecFileError,
    as_point_spectrum,
    load_spectral_data,
    parse_spectral_data,
)


def test_decimals_parse_exactly():
    data = parse_spectral_data("point 0.1 2\npoint -1.25 1\n")
    assert data.points.entries == ((F(-5, 4), 1), (F(1, 10), 2))


def test_rational_literals_and_inf():
    data = parse_spectral_data("point 3/2 inf\ninterval -1/2 1/2\nepoint 7\n")
    assert data.points.entries == ((F(3, 2), INFINITE),)
    assert data.essential_intervals == ((F(-1, 2), F(1, 2)),)
    assert data.essential_points == (F(7),)


def test_comments_and_blank_lines():
    text = """
    # a full-line comment

    point 1 1   # trailing comment
    """
    data = parse_spectral_data(text)
    assert data.points.entries == ((F(1), 1),)


def test_duplicate_points_merge():
    data = parse_spectral_data("point 2 1\npoint 2 3\n")
    assert data.points.entries == ((F(2), 4),)


@pytest.mark.parametrize(
    "line, fragment",
    [
        ("pt 1 1", "unknown directive"),
        ("point 1", "point takes"),
        ("point 1 0", "multiplicity"),
        ("point 1 -2", "multiplicity"),
        ("point 1 many", "not a multiplicity"),
        ("point abc 1", "not a rational"),
        ("interval 2 1", "lo > hi"),
        ("interval 1", "interval takes"),
        ("epoint", "epoint takes"),
    ],
)
def test_malformed_lines_carry_line_numbers(line, fragment):
    with pytest.raises(SpecFileError) as err:
        parse_spectral_data(f"point 0 1\n{line}\n")
    assert "line 2" in str(err.value)
    assert fragment in str(err.value)
    assert err.value.line_no == 2


def test_empty_file_is_an_empty_spectrum():
    with pytest.raises(EmptySpectrumError, match="empty spectrum"):
        parse_spectral_data("# nothing here\n")


def test_load_from_disk(tmp_path):
    path = tmp_path / "spec.txt"
    path.write_text("point 1 1\npoint 2 2\n", encoding="utf-8")
    assert load_spectral_data(path).points.values() == (F(1), F(2))


def test_point_extraction_rejects_essential_parts():
    data = parse_spectral_data("point 1 1\ninterval 0 2\n")
    with pytest.raises(ValueError, match="purely discrete"):
        as_point_spectrum(data)
    discrete = parse_spectral_data("point 1 1\n")
    assert as_point_spectrum(discrete) is discrete.points
