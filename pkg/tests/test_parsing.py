from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from dcoset.polyring import RingCtx, format_poly
from dcoset.parsing import ParseError, parse_point, parse_poly, parse_polys


@pytest.fixture
def ring():
    return RingCtx(("x1", "x2", "x3", "x4"))


def test_products_and_sums(ring):
    x1, x2, x3, x4 = ring.gens()
    assert parse_poly("x1*x4 + x2*x3", ring) == x1 * x4 + x2 * x3


def test_rational_coefficient_and_power(ring):
    x1 = ring.gen("x1")
    assert parse_poly("3/2*x1^2 - 1", ring) == Fraction(3, 2) * x1 ** 2 - 1


def test_leading_sign(ring):
    x1 = ring.gen("x1")
    assert parse_poly("-x1", ring) == -x1
    assert parse_poly("+x1", ring) == x1


def test_whitespace_insensitive(ring):
    a = parse_poly("x1*x2+x3", ring)
    b = parse_poly("  x1 * x2   +   x3 ", ring)
    assert a == b


def test_constant_terms(ring):
    assert parse_poly("2", ring) == 2
    assert parse_poly("2/3", ring) == Fraction(2, 3)
    assert parse_poly("0", ring).is_zero()


def test_repeated_variables_multiply(ring):
    x1 = ring.gen("x1")
    assert parse_poly("x1*x1*x1", ring) == x1 ** 3


def test_negative_exponent_rejected(ring):
    with pytest.raises(ParseError, match="negative exponent"):
        parse_poly("x1^-1", ring)


def test_unknown_variable_rejected(ring):
    with pytest.raises(ParseError, match="unknown variable 'y'"):
        parse_poly("y + 1", ring)


def test_no_implicit_multiplication(ring):
    with pytest.raises(ParseError, match="position 4"):
        parse_poly("x1 x2", ring)


def test_error_positions_are_1_based(ring):
    with pytest.raises(ParseError, match="position 1"):
        parse_poly("*x1", ring)


def test_unexpected_character(ring):
    with pytest.raises(ParseError, match="unexpected character"):
        parse_poly("x1 @ x2", ring)


def test_empty_input(ring):
    with pytest.raises(ParseError):
        parse_poly("", ring)
    with pytest.raises(ParseError):
        parse_poly("   ", ring)


def test_trailing_operator(ring):
    with pytest.raises(ParseError):
        parse_poly("x1 +", ring)


def test_parse_polys_splits_on_commas(ring):
    polys = parse_polys("x1, x2 - 1, 3", ring)
    assert len(polys) == 3
    assert polys[2] == 3


def test_parse_point():
    assert parse_point("0,3/2,-1", 3) == (0, Fraction(3, 2), -1)
    with pytest.raises(ParseError):
        parse_point("1,2", 3)
    with pytest.raises(ParseError):
        parse_point("1,zebra,3", 3)


_R = RingCtx(("x", "y", "z"))
_coeffs = st.fractions(min_value=-30, max_value=30, max_denominator=9)


@st.composite
def _polys(draw):
    p = _R.zero()
    for _ in range(draw(st.integers(min_value=0, max_value=5))):
        exps = tuple(draw(st.integers(min_value=0, max_value=4)) for _ in _R.vars)
        p = p + _R.monomial(exps, draw(_coeffs))
    return p


@given(_polys())
@settings(max_examples=120, deadline=None)
def test_round_trip_printer_parser(p):
    assert parse_poly(format_poly(p), _R) == p
