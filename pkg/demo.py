#!/usr/bin/env python3
"""
Kummer Hasse-Witt Toolkit - Demo Script

Walks through the pipeline on a few small curves: field arithmetic,
square-free factorization, the Hasse-Witt matrix of a Kummer cover, its
invariants and bounds, and a characteristic-2 curve.
"""

import sys
import os
sys.path.append(os.path.dirname(os.path.abspath(__file__)))

from app.bounds import a_number_upper_bound, orbits
from app.finite_field import make_field
from app.kummer import basis_labels, hasse_witt_matrix, ramification_profile, validate_kummer
from app.parser import parse_poly
from app.polynomial import squarefree_decompose
from app.report import build_char2_report
from app.semilinear import invariants


def demo_fields():
    print("=" * 60)
    print("Kummer Hasse-Witt Toolkit - Demo")
    print("=" * 60)
    print()

    print("1. FINITE FIELDS")
    print("-" * 30)
    F9 = make_field(3, 2)
    print(f"{F9} defined by {F9.modulus_text()}")
    t = F9.gen
    print(f"t^4 = {t ** 4}, t^8 = {t ** 8}")
    print(f"Frobenius of t: {t.frobenius()}")
    print()


def demo_squarefree():
    print("2. SQUARE-FREE DECOMPOSITION")
    print("-" * 30)
    F3 = make_field(3)
    f = parse_poly("(x+1)^2*(x^3+2*x+1)^3", F3)
    decomposition = squarefree_decompose(f)
    print(f"f = {f}")
    for j, part in sorted(decomposition.parts.items()):
        print(f"  multiplicity {j}: {part}")
    print()


def demo_kummer():
    print("3. A GENUS 5 COVER: y^11 = x^2 (x+1) OVER F_13")
    print("-" * 30)
    F13 = make_field(13)
    curve = validate_kummer(F13, 11, parse_poly("x^2*(x+1)", F13))
    profile = ramification_profile(curve)
    print(f"m_i = {list(profile.m)}, genus {profile.genus}")
    print(f"orbits of i -> 13 i mod 11: {orbits(11, 13).orbits}")

    matrix, _ = hasse_witt_matrix(curve, profile)
    labels = basis_labels(curve, profile)
    print("\nHasse-Witt matrix, columns labelled by basis differentials:")
    print("  " + "  ".join(labels))
    for row in matrix.to_json():
        print("  " + " ".join(f"{v:>3}" for v in row))

    inv = invariants(matrix)
    bounds = a_number_upper_bound(curve, profile)
    print(f"\nrank {inv.rank}, a-number {inv.a_number}, p-rank {inv.p_rank}")
    print(f"a-number bounds [{bounds.a_lower}, {bounds.a_upper}], p-rank <= {bounds.f_upper}")
    print()


def demo_char2():
    print("4. CHARACTERISTIC 2: y^2 + y = x^5 OVER F_2")
    print("-" * 30)
    report = build_char2_report(1, 2, "1", "x^5")
    print(f"matrix {report.matrix}")
    print(f"a-number {report.a_number}, nilpotent {report.nilpotent}, superspecial {report.superspecial}")
    print()


def main():
    demo_fields()
    demo_squarefree()
    demo_kummer()
    demo_char2()

    print("5. USAGE EXAMPLES")
    print("-" * 30)
    print('kummer-hw analyze --p 13 --n 11 --f "x^2*(x+1)"')
    print('kummer-hw bounds --p 5 --n 6 --f "x^3+x^2+1" --json')
    print("kummer-hw search --p 5 --deg 5 --filter superspecial")
    print("kummer-hw selftest --quick")


if __name__ == "__main__":
    main()
