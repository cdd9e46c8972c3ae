#!/usr/bin/env python3
"""
Tests for polynomial arithmetic and square-free decomposition.
"""

import sys
import os
sys.path.append(os.path.dirname(os.path.abspath(__file__)))

import math
import random

import pytest
from hypothesis import assume, given, settings, strategies as st

from app.errors import MixedFieldError, PolynomialDivisionError, PolynomialError, ZeroPolynomialError
from app.finite_field import is_irreducible_mod_p, make_field
from app.parser import parse_poly
from app.polynomial import Polynomial, gcd, squarefree_decompose


def poly(text, p, k=1):
    return parse_poly(text, make_field(p, k))


def polynomials(p, k=1, max_degree=8):
    F = make_field(p, k)
    return st.lists(st.integers(min_value=0, max_value=F.order - 1), max_size=max_degree + 1).map(
        lambda values: Polynomial._from_values(F, values)
    )


def test_basic_arithmetic():
    print("Testing polynomial arithmetic...")

    F7 = make_field(7)
    x = Polynomial.x(F7)
    assert (x + 1) * (x - 1) == x ** 2 - 1
    assert (x + 1) ** 3 == poly("x^3+3*x^2+3*x+1", 7)
    assert 2 * x + 5 == poly("2*x+5", 7)
    assert 1 - x == poly("-x+1", 7)
    assert Polynomial.zero(F7).degree == -math.inf
    assert Polynomial.one(F7).degree == 0
    assert poly("x^3+x", 7)(2) == 10 % 7
    assert poly("x^4+3*x^2", 7).derivative() == poly("4*x^3+6*x", 7)
    assert poly("2*x^2+4", 7).monic() == poly("x^2+2", 7)

    print("✓ arithmetic works")


def test_coefficient_access():
    f = poly("x^5+4*x", 5)
    assert f.degree == 5
    assert f.coeff_at(1) == 4
    assert f.coeff_at(0) == 0
    assert f.coeff_at(17) == 0
    assert f.is_monic()
    assert not f.is_constant()
    assert f.values == (0, 4, 0, 0, 0, 1)


@settings(max_examples=60, deadline=None)
@given(polynomials(5), polynomials(5))
def test_division_with_remainder(a, b):
    assume(not b.is_zero())
    q, r = a.divrem(b)
    assert q * b + r == a
    assert r.degree < b.degree


@settings(max_examples=40, deadline=None)
@given(polynomials(2, 2, 6), polynomials(2, 2, 6))
def test_gcd_divides_both(a, b):
    assume(not (a.is_zero() and b.is_zero()))
    d = gcd(a, b)
    assert d.is_monic()
    assert (a % d).is_zero()
    assert (b % d).is_zero()


def test_gcd_examples():
    F7 = make_field(7)
    assert gcd(poly("(x+1)^2*(x+2)", 7), poly("(x+1)*(x+3)", 7)) == poly("x+1", 7)
    assert gcd(poly("x^2+1", 7), poly("x", 7)) == Polynomial.one(F7)
    assert gcd(Polynomial.zero(F7), Polynomial.zero(F7)).is_zero()
    assert gcd(poly("3*x+3", 7), Polynomial.zero(F7)) == poly("x+1", 7)


def test_squarefree_with_pth_power_part():
    print("Testing square-free decomposition over F_3...")

    f = poly("(x+1)^2*(x^3+2*x+1)^3", 3)
    decomposition = squarefree_decompose(f)
    assert decomposition.parts == {2: poly("x+1", 3), 3: poly("x^3+2*x+1", 3)}
    assert decomposition.unit == 1
    assert decomposition.reconstruct() == f
    assert decomposition.degree() == f.degree

    print("✓ (x+1)^2 (x^3+2x+1)^3 splits with the cube recovered by a p-th root")


def test_squarefree_unit_and_constants():
    f = poly("3*x^2", 5)
    decomposition = squarefree_decompose(f)
    assert decomposition.unit == 3
    assert decomposition.parts == {2: poly("x", 5)}
    assert squarefree_decompose(poly("4", 5)).parts == {}
    with pytest.raises(ZeroPolynomialError):
        squarefree_decompose(Polynomial.zero(make_field(5)))


@pytest.mark.parametrize("p,k", [(2, 1), (3, 1), (2, 2), (3, 2)])
def test_squarefree_reconstructs(p, k):
    @settings(max_examples=40, deadline=None)
    @given(polynomials(p, k, 9))
    def check(f):
        assume(not f.is_zero())
        decomposition = squarefree_decompose(f)
        assert decomposition.reconstruct() == f
        parts = list(decomposition.parts.values())
        for part in parts:
            assert part.is_monic()
            assert part.degree >= 1
            assert gcd(part, part.derivative()).degree == 0
        for i, a in enumerate(parts):
            for b in parts[i + 1:]:
                assert gcd(a, b).degree == 0

    check()


def test_pth_root():
    F9 = make_field(3, 2)
    t = F9.gen
    g = Polynomial(F9, [t, 1, t + 1])
    assert (g ** 3).pth_root() == g
    with pytest.raises(PolynomialError):
        poly("x^3+x", 3).pth_root()


def test_polynomial_errors():
    print("Testing polynomial errors...")

    with pytest.raises(PolynomialDivisionError):
        poly("x+1", 5) // Polynomial.zero(make_field(5))
    with pytest.raises(ZeroPolynomialError):
        Polynomial.zero(make_field(5)).monic()
    with pytest.raises(ZeroPolynomialError):
        Polynomial.zero(make_field(5)).leading
    with pytest.raises(MixedFieldError):
        poly("x", 5) + poly("x", 7)
    with pytest.raises(PolynomialError):
        poly("x", 5) ** -1

    print("✓ errors raised")


def random_irreducible(rng, F, degree):
    while True:
        values = [rng.randrange(F.p) for _ in range(degree)] + [1]
        if is_irreducible_mod_p(values, F.p):
            return Polynomial._from_values(F, values)


def test_squarefree_from_known_factors():
    print("Testing square-free decomposition on products of irreducibles...")

    rng = random.Random(1307)
    checked = 0
    while checked < 500:
        p = (2, 3, 5, 13)[checked % 4]
        F = make_field(p)
        multiplicity = {}
        total = 0
        for _ in range(rng.randint(1, 4)):
            degree = rng.randint(1, 3)
            # multiplicities up to 2p so p-th power parts show up
            e = rng.randint(1, 2 * p) if p < 5 else rng.choice([1, 2, 3, p])
            if total + degree * e > 12:
                continue
            factor = random_irreducible(rng, F, degree)
            multiplicity[factor] = multiplicity.get(factor, 0) + e
            total += degree * e
        unit = rng.randrange(1, p)
        f = Polynomial.constant(F, unit)
        for factor, e in multiplicity.items():
            f = f * factor ** e
        if f.degree < 1:
            continue

        expected = {}
        for factor, e in multiplicity.items():
            expected[e] = expected.get(e, Polynomial.constant(F, 1)) * factor
        decomposition = squarefree_decompose(f)
        assert decomposition.reconstruct() == f
        assert decomposition.unit == unit
        assert decomposition.parts == expected, (p, multiplicity)
        checked += 1

    print("✓ 500 products recovered, p-th power parts included")
