from fractions import Fraction
import json
from pathlib import Path

import pytest

from lensobstruct.casson import (LaurentPoly, casson_surgery_delta, half_second_derivative,
                                 parity_obstruction, parse_poly)
from lensobstruct.errors import InvalidAlexander

FIXTURES = Path(__file__).parent / "fixtures"


def test_parse_forms():
    trefoil = LaurentPoly({-1: 1, 0: -1, 1: 1})
    assert parse_poly("t^-1 - 1 + t") == trefoil
    assert parse_poly("t - 1 + t^{-1}") == trefoil
    assert parse_poly('{"-1": 1, "0": -1, "1": 1}') == trefoil
    assert parse_poly("2t^3 - 3*t^(-2) + 1") == LaurentPoly({3: 2, -2: -3, 0: 1})
    assert parse_poly("-t + t") == LaurentPoly({})
    assert str(trefoil) == "t - 1 + t^-1"
    for bad in ("t^", "t t", "", "x + 1", "{bad"):
        with pytest.raises(InvalidAlexander):
            parse_poly(bad)


def test_half_second_derivative_examples():
    assert half_second_derivative(parse_poly("t - 1 + t^-1")) == 1
    assert half_second_derivative(parse_poly("1")) == 0
    fixture = json.loads((FIXTURES / "cable_3_-1_trefoil.json").read_text())
    assert half_second_derivative(parse_poly(json.dumps(fixture["alexander"]))) == 9


def test_figure_eight_is_negative():
    assert half_second_derivative(parse_poly("-t + 3 - t^-1")) == -1


def test_validation():
    with pytest.raises(InvalidAlexander):
        half_second_derivative(parse_poly("t - 1"))
    with pytest.raises(InvalidAlexander):
        half_second_derivative(parse_poly("-t + 1 - t^-1"))
    assert half_second_derivative(parse_poly("-t + 1 - t^-1"), normalize_sign=True) == 1


def test_surgery_delta():
    assert casson_surgery_delta(9, -3) == -3
    assert casson_surgery_delta(0, 5) == 0
    assert casson_surgery_delta(1, -7) == Fraction(-1, 7)
    with pytest.raises(ValueError):
        casson_surgery_delta(1, 0)


def test_parity():
    assert parity_obstruction(9, -3)
    assert not parity_obstruction(0, -4)
    assert not parity_obstruction(12, -3)
    for n in range(-20, -1):
        for k in range(-5, 6):
            assert not parity_obstruction(2 * n * k, n)
    with pytest.raises(ValueError):
        parity_obstruction(1, 2)
