#!/usr/bin/env python3
"""
Tests for the polynomial text grammar.
"""

import sys
import os
sys.path.append(os.path.dirname(os.path.abspath(__file__)))

import pytest

from app.errors import ExponentOverflow, ParseError
from app.finite_field import make_field
from app.parser import format_poly, parse_poly, poly_text, tokenize
from app.polynomial import Polynomial


def test_parse_products_and_powers():
    print("Testing parser...")

    F13 = make_field(13)
    f = parse_poly("x^2*(x+1)", F13)
    assert f.values == (0, 0, 1, 1)
    assert parse_poly(" x ^ 2 * ( x + 1 ) ", F13) == f
    assert parse_poly("-x+1", F13).values == (1, 12)
    assert parse_poly("-(x+1)^2", F13).values == (12, 11, 12)
    assert parse_poly("13*x+14", F13).values == (1,)
    assert parse_poly("0", F13).is_zero()
    assert parse_poly("3*x^4 - (x+1)^2*x", F13) == parse_poly("3*x^4-x^3-2*x^2-x", F13)

    print("✓ parsed")


def test_literals_are_reduced_into_the_prime_field():
    F9 = make_field(3, 2)
    f = parse_poly("4*x^2+5", F9)
    assert f.values == (2, 0, 1)


def test_parse_errors_carry_byte_offsets():
    print("Testing parse errors...")

    F5 = make_field(5)
    with pytest.raises(ParseError) as err:
        parse_poly("x + * 2", F5)
    assert err.value.offset == 4

    with pytest.raises(ParseError) as err:
        parse_poly("x$", F5)
    assert err.value.offset == 1

    with pytest.raises(ParseError) as err:
        parse_poly("(x+1", F5)
    assert err.value.offset == 4

    with pytest.raises(ParseError) as err:
        parse_poly("x x", F5)
    assert err.value.offset == 2

    with pytest.raises(ParseError) as err:
        parse_poly("é+x", F5)
    assert err.value.offset == 0

    print("✓ offsets reported")


def test_exponent_limit():
    F5 = make_field(5)
    with pytest.raises(ExponentOverflow) as err:
        parse_poly("x^5000", F5)
    assert err.value.offset == 2
    assert err.value.limit == 4096
    assert parse_poly("x^20", F5, exponent_limit=20).degree == 20
    with pytest.raises(ExponentOverflow):
        parse_poly("x^21", F5, exponent_limit=20)


def test_degree_limit():
    print("Testing the degree limit...")
    F5 = make_field(5)

    with pytest.raises(ExponentOverflow) as err:
        parse_poly("((x+1)^100)^100", F5)
    assert err.value.offset == 12
    assert err.value.limit == 4096
    assert "exponent overflow" in str(err.value)

    with pytest.raises(ExponentOverflow) as err:
        parse_poly("x^3000*x^3000", F5)
    assert err.value.offset == 6

    assert parse_poly("((x+1)^64)^64", F5).degree == 4096
    assert parse_poly("2^5000", F5, exponent_limit=5000).degree == 0
    with pytest.raises(ExponentOverflow):
        parse_poly("(x^2)^11", F5, degree_limit=20)

    print("✓ nested powers and products stop at the degree limit")


def test_tokenize():
    kinds = [t.kind for t in tokenize("12*x^3")]
    assert kinds == ["number", "*", "x", "^", "number", "end of input"]


def test_canonical_text():
    F5 = make_field(5)
    assert format_poly(parse_poly("x^5-x", F5)) == "x^5+4*x"
    assert format_poly(parse_poly("x^2*(x+1)", make_field(13))) == "x^3+x^2"
    assert format_poly(parse_poly("0", F5)) == "0"
    assert format_poly(parse_poly("3", F5)) == "3"
    for text in ("x^5+4*x", "2*x^3+x+1", "x^7"):
        assert format_poly(parse_poly(text, F5)) == text


def test_extension_coefficients_fall_back_to_json():
    F9 = make_field(3, 2)
    f = Polynomial(F9, [F9.gen, 1])
    with pytest.raises(ValueError):
        format_poly(f)
    assert poly_text(f) == "[[0,1],[1,0]]"
    assert poly_text(parse_poly("x+2", F9)) == "x+2"
