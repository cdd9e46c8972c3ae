#!/usr/bin/env python3
"""
Tests for F_{p^k} arithmetic.
"""

import sys
import os
sys.path.append(os.path.dirname(os.path.abspath(__file__)))

import pytest
from hypothesis import given, settings, strategies as st

from app.errors import FieldError, FieldInversionError, MixedFieldError, NotPrimeError
from app.finite_field import (
    frobenius,
    is_irreducible_mod_p,
    is_prime,
    make_field,
    prime_factors,
)

FIELDS = [(2, 1), (5, 1), (2, 2), (2, 3), (3, 2), (5, 2), (3, 3)]


def test_moduli_are_lexicographically_smallest():
    """The defining polynomial is fixed by (p, k)."""
    print("Testing field moduli...")

    assert make_field(5).modulus == (0, 1)
    assert make_field(2, 2).modulus == (1, 1, 1)
    assert make_field(3, 2).modulus == (1, 0, 1)
    assert make_field(2, 3).modulus == (1, 1, 0, 1)
    assert make_field(3, 2).modulus_text() == "x^2+1"
    assert str(make_field(3, 2)) == "F_9"

    print("✓ moduli match")


def test_generator_relations():
    print("Testing generator of F_9...")

    F9 = make_field(3, 2)
    t = F9.gen
    assert t ** 2 == -1
    assert t ** 4 == 1
    assert t.to_json() == [0, 1]
    assert str(t) == "[0,1]"
    assert make_field(5)(3).to_json() == 3

    print("✓ t^2 = -1 in F_3[t]/(t^2+1)")


@pytest.mark.parametrize("p,k", FIELDS)
def test_every_nonzero_element_is_invertible(p, k):
    F = make_field(p, k)
    for a in F.nonzero_elements():
        assert a * a.inverse() == 1
        assert a ** (F.order - 1) == 1
        assert a / a == 1


@pytest.mark.parametrize("p,k", FIELDS)
def test_frobenius_is_a_field_automorphism(p, k):
    F = make_field(p, k)
    for a in F.elements():
        assert frobenius(a, k) == a
        assert a.frobenius() == a ** p
    elements = list(F.elements())
    for a in elements[:7]:
        for b in elements[:7]:
            assert (a + b).frobenius() == a.frobenius() + b.frobenius()
            assert (a * b).frobenius() == a.frobenius() * b.frobenius()


@settings(max_examples=60, deadline=None)
@given(st.sampled_from(FIELDS), st.data())
def test_ring_axioms(pk, data):
    F = make_field(*pk)
    index = st.integers(min_value=0, max_value=F.order - 1)
    a, b, c = (F.from_index(data.draw(index)) for _ in range(3))
    assert a + b == b + a
    assert a * (b + c) == a * b + a * c
    assert (a - b) + b == a
    assert -a + a == 0
    assert (a * b) * c == a * (b * c)


def test_tables_agree_with_coordinate_multiplication():
    print("Testing log tables against polynomial multiplication...")

    F = make_field(3, 3)
    assert F._exp is not None
    for a in range(F.order):
        for b in range(0, F.order, 5):
            expected = F._mul_coords(a, b) if a and b else 0
            assert F._mul(a, b) == expected

    print("✓ log/exp tables agree")


def test_large_field_without_tables():
    F = make_field(3, 8)
    assert F._exp is None
    for v in (1, 2, 17, 500, 6560):
        a = F.from_index(v)
        assert a * a.inverse() == 1
        assert frobenius(a, 8) == a


def test_is_power():
    F7 = make_field(7)
    assert F7.is_power(2, 2)
    assert not F7.is_power(3, 2)
    assert F7.is_power(6, 3)
    assert not F7.is_power(2, 3)
    assert F7.is_power(0, 5)
    # every element is a cube when 3 does not divide q - 1
    F5 = make_field(5)
    assert all(F5.is_power(a, 3) for a in F5.nonzero_elements())


def test_field_errors():
    print("Testing field errors...")

    with pytest.raises(NotPrimeError):
        make_field(4)
    with pytest.raises(FieldError):
        make_field(5, 0)
    with pytest.raises(MixedFieldError):
        make_field(5)(1) + make_field(7)(1)
    with pytest.raises(FieldInversionError):
        make_field(5)(0).inverse()
    with pytest.raises(ZeroDivisionError):
        make_field(2, 2).zero.inverse()
    with pytest.raises(FieldError):
        int(make_field(3, 2).gen)
    with pytest.raises(FieldError):
        frobenius(make_field(5)(2), -1)
    with pytest.raises(FieldError):
        make_field(3, 2).from_coefficients([1, 2, 0])

    print("✓ errors raised")


def test_integer_helpers():
    assert [n for n in range(20) if is_prime(n)] == [2, 3, 5, 7, 11, 13, 17, 19]
    assert prime_factors(60) == [2, 3, 5]
    assert prime_factors(11) == [11]
    assert is_irreducible_mod_p([1, 1, 1], 2)
    assert not is_irreducible_mod_p([1, 0, 1], 2)
    assert is_irreducible_mod_p([1, 2, 0, 1], 3)
    assert not is_irreducible_mod_p([1, 0, 0, 1], 3)
