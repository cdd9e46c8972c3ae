#!/usr/bin/env python3
"""
Tests for the genus-4, characteristic-11 campaign.
"""

import sys
import os
sys.path.append(os.path.dirname(os.path.abspath(__file__)))

import random

from hypothesis import given, settings, strategies as st

from app.campaign import (
    HIGH_COEFFICIENTS,
    LOW_COEFFICIENTS,
    MATRIX_COEFFICIENTS,
    P,
    b18_closed_form,
    check_b18,
    check_relations,
    classify,
    fifth_power_coefficient,
    genus4_char11_campaign,
    matrix_coefficients,
    relation_values,
    sweep,
)
from app.finite_field import make_field
from app.polynomial import Polynomial, gcd
from app.report import build_invariant_report

F11 = make_field(P)
coefficients = st.lists(st.integers(min_value=0, max_value=P - 1), min_size=10, max_size=10)


@settings(max_examples=50, deadline=None)
@given(coefficients, st.integers(min_value=0, max_value=45))
def test_fifth_power_coefficient(coeffs, j):
    f = Polynomial(F11, coeffs)
    assert fifth_power_coefficient(coeffs, j) == (f ** 5).coeff_at(j)


def test_relations():
    print("Testing the b_7..b_10 relations...")

    pairs, failures = check_relations(random.Random(7))
    assert pairs == 110
    assert failures == []

    a3, a4, a5, a6 = relation_values(F11, 1, 1)
    coeffs = [0, 1, 1, int(a3), int(a4), int(a5), int(a6), 0, 0, 1]
    assert all(fifth_power_coefficient(coeffs, j) == 0 for j in LOW_COEFFICIENTS)

    print("✓ a_3..a_6 kill b_7..b_10 for all 110 pairs")


@settings(max_examples=80, deadline=None)
@given(
    st.integers(min_value=1, max_value=P - 1),
    st.integers(min_value=0, max_value=P - 1),
    st.integers(min_value=0, max_value=P - 1),
    st.integers(min_value=0, max_value=P - 1),
    st.integers(min_value=0, max_value=P - 1),
)
def test_b18_closed_form(a1, a2, a7, a8, a9):
    a3, a4, a5, a6 = relation_values(F11, a1, a2)
    coeffs = [0, a1, a2, int(a3), int(a4), int(a5), int(a6), a7, a8, a9]
    assert fifth_power_coefficient(coeffs, 18) == b18_closed_form(F11, a1, a2, a7, a8)


def test_b18_sampling():
    assert check_b18(random.Random(3), 200) == []


def test_sweep():
    print("Testing the F_11 sweep...")

    result = sweep()
    assert result.tuples_covered == 11 ** 7 * 10 == 194_871_710
    assert result.stage_survivors == {7: 11, 8: 11, 9: 11, 10: 11}
    assert result.grid_evaluated == 11 * 11 * 11 * 10
    assert result.high_survivors == 20
    assert len(result.singular) == 10
    assert len(result.partial_vanishing) == 10
    assert result.witnesses == []

    for coeffs in result.singular:
        f = Polynomial(F11, coeffs)
        assert gcd(f, f.derivative()).degree > 0
    for coeffs in result.partial_vanishing:
        entries = matrix_coefficients(coeffs)
        assert entries[:8] == [0] * 8
        assert any(entries[8:])

    print("✓ no F_11-rational superspecial curve with a_1 = 1")
    print(f"✓ {len(result.partial_vanishing)} smooth rows with only the t = 1, 2 entries zero")


def test_classify():
    print("Testing row classification...")

    assert MATRIX_COEFFICIENTS == (10, 9, 8, 7, 21, 20, 19, 18, 32, 31, 30, 29, 43, 42, 41, 40)

    # f = x (x+9)^3 (...) has a triple root
    assert classify([0, 1, 1, 9, 6, 1, 5, 8, 0, 2]) == "singular"
    report = build_invariant_report(P, 1, 2, "x+x^2+9*x^3+6*x^4+x^5+5*x^6+8*x^7+2*x^9")
    assert report.genus == 3

    smooth = [0, 1, 2, 3, 4, 5, 6, 7, 8, 9]
    assert classify(smooth) == "partial"
    report = build_invariant_report(P, 1, 2, "x+2*x^2+3*x^3+4*x^4+5*x^5+6*x^6+7*x^7+8*x^8+9*x^9")
    assert report.genus == 4
    assert not report.superspecial
    assert any(any(row) for row in report.matrix.entries)

    print("✓ singular and partially vanishing rows told apart")


def test_campaign_report():
    report = genus4_char11_campaign(seed=11, samples=50, run_sweep=False)
    assert report.passed
    assert report.sweep is None
    assert report.relation_pairs == 110
    assert report.b18_samples == 50
    assert "algebraically closed" in report.scope
    assert HIGH_COEFFICIENTS == (18, 19, 20, 21)
