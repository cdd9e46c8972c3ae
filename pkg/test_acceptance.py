#!/usr/bin/env python3
"""
Acceptance Script for kummer-hw

Reruns the worked examples end to end through the report pipeline. It can
be run directly (python test_acceptance.py) or collected by pytest.
"""

import sys
import os
sys.path.append(os.path.dirname(os.path.abspath(__file__)))

from app.bounds import ekedahl_table
from app.report import build_bounds_output, build_char2_report, build_invariant_report
from app.selftest import run_selftest


def test_eleven_cover():
    """y^11 = x^2 (x+1) over F_13."""
    print("Testing y^11 = x^2(x+1) over F_13...")

    r = build_invariant_report(13, 1, 11, "x^2*(x+1)")
    assert r.m == [1, 1, 1, 2, 2, 1, 1, 2, 2, 2], f"got m = {r.m}"
    assert r.genus == 5
    assert [b.i for b in r.matrix.blocks] == [4, 5, 8, 9, 10]
    assert r.matrix.entries[2][0] == 4
    assert r.matrix.entries[4][1] == 5
    assert r.matrix.entries[1][2] == 10
    assert r.matrix.entries[3][4] == 3
    assert (r.rank, r.a_number, r.p_rank) == (4, 1, 0)
    assert (r.bounds.a_lower, r.bounds.f_upper) == (1, 0)

    print("✓ genus 5, a-number 1, p-rank 0")


def test_sextic_cover():
    """y^6 = x^3 + x^2 + 1 over F_5."""
    print("Testing y^6 = x^3+x^2+1 over F_5...")

    r = build_invariant_report(5, 1, 6, "x^3+x^2+1")
    assert r.genus == 4
    assert r.orbits == [[1, 5], [2, 4], [3]]
    assert (r.rank, r.a_number, r.p_rank) == (1, 3, 1)
    assert r.bounds.a_lower == r.a_number
    assert r.bounds.f_upper == r.p_rank
    assert r.bounds.rank_upper == r.rank
    assert r.bounds.a_upper == 4

    out = build_bounds_output(5, 1, 6, "x^3+x^2+1")
    assert out.bounds == r.bounds

    print("✓ a_lower, f_upper and rank_upper attained")


def test_superspecial_genus_two():
    print("Testing y^2 = x^5 - x over F_5...")

    r = build_invariant_report(5, 1, 2, "x^5+4*x")
    assert r.genus == 2
    assert r.superspecial
    assert r.a_number == 2

    print("✓ superspecial")


def test_elliptic_oracle():
    print("Testing elliptic curves against point counts...")

    for p, f, expected in [(5, "x^3+1", 0), (5, "x^3+x", 1), (7, "x^3+2", 1), (7, "x^3+x", 0)]:
        r = build_invariant_report(p, 1, 2, f)
        assert r.p_rank == expected, f"y^2 = {f} over F_{p}"
        assert r.oracles.elliptic_p_rank == expected

    print("✓ Hasse-Witt p-rank matches #E(F_p)")


def test_char2_constant_q():
    print("Testing y^2 + y = x^5 over F_2...")

    r = build_char2_report(1, 2, "1", "x^5")
    assert r.matrix == [[0, 0], [1, 0]]
    assert r.nilpotent
    assert r.a_number == r.expected_a_number == 1

    print("✓ nilpotent with a-number 1")


def test_genus_zero():
    r = build_invariant_report(7, 1, 3, "x")
    assert r.genus == 0
    assert r.matrix.size == 0
    assert r.matrix.entries == []
    print("✓ genus 0 gives an empty matrix")


def test_ekedahl_odd_degree():
    odd = [row for row in ekedahl_table() if row[2] % 2]
    assert all(bound >= 1 for _, _, _, bound in odd)
    print(f"✓ {len(odd)} odd-degree rows with a positive block bound")


def test_selftest_checks():
    print("Running the quick self-test...")

    report = run_selftest(full=False)
    failed = [c for c in report.checks if not c.passed]
    assert not failed, failed
    assert report.campaign.sweep is None

    print(f"✓ {report.passed}/{len(report.checks)} checks")


def run_all_tests():
    """Run every acceptance check and print a summary."""
    print("=" * 60)
    print("kummer-hw - Acceptance")
    print("=" * 60)
    print()

    tests = [
        test_eleven_cover,
        test_sextic_cover,
        test_superspecial_genus_two,
        test_elliptic_oracle,
        test_char2_constant_q,
        test_genus_zero,
        test_ekedahl_odd_degree,
        test_selftest_checks,
    ]

    passed = 0
    failed = 0

    for test in tests:
        try:
            test()
            passed += 1
        except Exception as e:
            print(f"✗ Test {test.__name__} failed: {e}")
            failed += 1
        print()

    print("=" * 60)
    print(f"Test Results: {passed} passed, {failed} failed")
    print("=" * 60)

    if failed == 0:
        print("All acceptance checks passed.")
        print("\nNext steps:")
        print("1. Run the demo: python demo.py")
        print("2. Run the full self-test: kummer-hw selftest")
    else:
        print("Some acceptance checks failed. Please check the errors above.")

    return failed == 0


if __name__ == "__main__":
    success = run_all_tests()
    sys.exit(0 if success else 1)
