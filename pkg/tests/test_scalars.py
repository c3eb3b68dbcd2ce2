from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from geu.errors import ParseError
from geu.scalars import (
    GS_ONE,
    GS_ZERO,
    GaussScalar,
    encode_scalar,
    gauss_sqrt,
    gs,
    parse_scalar,
    rational_sqrt,
)

fractions = st.fractions(
    min_value=-9, max_value=9, max_denominator=12
)
scalars = st.builds(gs, fractions, fractions)


def test_basic_arithmetic():
    a = gs("1/2", "1/3")
    b = gs(2, -1)
    assert a + b == gs("5/2", "-2/3")
    assert a * b == gs(Fraction(1, 2) * 2 + Fraction(1, 3), Fraction(2, 3) - Fraction(1, 2))
    assert (a / b) * b == a
    assert -a + a == GS_ZERO


def test_canonical_fractions():
    z = gs("4/6")
    assert z.re.numerator == 2 and z.re.denominator == 3
    assert gs("-2/4").re == Fraction(-1, 2)


def test_conjugate_and_pow():
    z = gs(1, 2)
    assert z.conjugate() == gs(1, -2)
    assert z * z.conjugate() == gs(5)
    assert gs(0, 1) ** 2 == gs(-1)
    assert gs(2) ** -2 == gs("1/4")


def test_division_by_zero():
    with pytest.raises(ZeroDivisionError):
        GS_ONE / GS_ZERO


@given(scalars, scalars, scalars)
def test_field_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a + b == b + a and a * b == b * a
    if a:
        assert a * (GS_ONE / a) == GS_ONE


@given(scalars)
def test_encode_parse_round_trip(z):
    assert parse_scalar(encode_scalar(z)) == z


def test_parse_forms():
    assert parse_scalar("3/4") == gs("3/4")
    assert parse_scalar(5) == gs(5)
    assert parse_scalar({"re": "1/2", "im": "-1/3"}) == gs("1/2", "-1/3")
    with pytest.raises(ParseError):
        parse_scalar("not-a-number")
    with pytest.raises(ParseError):
        parse_scalar(1.5)
    with pytest.raises(ParseError):
        parse_scalar({"re": "1", "bogus": "2"})


def test_rational_sqrt():
    assert rational_sqrt(Fraction(9, 4)) == Fraction(3, 2)
    assert rational_sqrt(Fraction(2)) is None
    assert rational_sqrt(Fraction(-1)) is None


@given(scalars)
def test_gauss_sqrt_squares(z):
    root = gauss_sqrt(z * z)
    assert root is not None
    assert root * root == z * z


def test_gauss_sqrt_cases():
    assert gauss_sqrt(gs(-4)) == gs(0, 2)
    assert gauss_sqrt(gs(0, 2)) in (gs(1, 1), gs(-1, -1))
    assert gauss_sqrt(gs(2)) is None
    assert gauss_sqrt(gs(1, 1)) is None
