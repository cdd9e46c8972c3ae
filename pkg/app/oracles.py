"""
Independent Cross-Checks

Each oracle reaches its answer by different mathematics from the main
pipeline: the genus from ramification indices, the p-rank of an elliptic
curve from its point count, and the p-rank of any matrix by iterating
images of vectors instead of multiplying matrices.
"""

from __future__ import annotations

import logging
from math import gcd

import numpy as np

from .errors import NotPrimeError, NotSmooth
from .finite_field import is_prime

logger = logging.getLogger(__name__)


def rh_genus(curve):
    """Genus of y^n = f from the tame Riemann-Hurwitz formula."""
    n = curve.n
    d = curve.degree
    twice_g_minus_2 = -2 * n + sum(
        part.degree * (n - gcd(n, j)) for j, part in curve.decomposition.parts.items()
    )
    if d % n:
        twice_g_minus_2 += n - gcd(n, d)
    if twice_g_minus_2 % 2:
        raise AssertionError(f"odd ramification total {twice_g_minus_2 + 2} for y^{n} = {curve.f}")
    g = twice_g_minus_2 // 2 + 1
    if g < 0:
        raise AssertionError(f"negative genus {g} for y^{n} = {curve.f}")
    return g


def elliptic_point_count(p, a, b):
    """Projective points of y^2 = x^3 + ax + b over F_p, counted over all x at once."""
    xs = np.arange(p, dtype=np.int64)
    rhs = (xs * xs % p * xs + a * xs + b) % p
    square_counts = np.bincount(xs * xs % p, minlength=p)
    return int(square_counts[rhs].sum()) + 1


def elliptic_point_count_prank(p, a, b):
    """0 if y^2 = x^3 + ax + b is supersingular over F_p, else 1."""
    if not is_prime(p):
        raise NotPrimeError(p)
    if p < 5:
        raise ValueError(f"short Weierstrass form needs p >= 5, got {p}")
    a, b = a % p, b % p
    if (4 * a ** 3 + 27 * b ** 2) % p == 0:
        raise NotSmooth(f"x^3 + {a}x + {b} has a repeated root mod {p}")
    count = elliptic_point_count(p, a, b)
    logger.debug("#E(F_%d) = %d for a=%d b=%d", p, count, a, b)
    return 0 if count == p + 1 else 1


def _insert(field, basis, vector):
    """Add vector to a reduced basis {pivot: row}; True when the span grows."""
    v = list(vector)
    for pivot, row in basis.items():
        c = v[pivot]
        if c:
            v = [x - c * y for x, y in zip(v, row)]
    pivot = next((i for i, c in enumerate(v) if c), None)
    if pivot is None:
        return False
    inv = v[pivot].inverse()
    v = [c * inv for c in v]
    for other, row in basis.items():
        c = row[pivot]
        if c:
            basis[other] = [x - c * y for x, y in zip(row, v)]
    basis[pivot] = v
    return True


def stabilized_prank(M):
    """
    Iterate images F(W), F(F(W)), ... of the whole space until the
    dimension stops dropping.

    Returns:
        tuple: (stable dimension, number of steps before it stabilized)
    """
    g = M.size
    fld = M.field
    if g == 0:
        return 0, 0
    image = [[fld.one if r == c else fld.zero for c in range(g)] for r in range(g)]
    dim = g
    steps = 0
    while True:
        basis = {}
        for vector in image:
            _insert(fld, basis, M.apply(vector))
        new_dim = len(basis)
        if new_dim == dim:
            return dim, steps
        if new_dim > dim:
            raise AssertionError("image dimension grew under Frobenius")
        image = list(basis.values())
        dim = new_dim
        steps += 1


def elliptic_prank_of_cubic(f):
    """
    Point-count p-rank of y^2 = f for a cubic f over a prime field, p >= 5.

    f is made monic (a quadratic twist, which keeps supersingularity) and
    depressed by x -> x - c_2/3 before counting.
    """
    field = f.field
    if field.k != 1 or f.degree != 3:
        raise ValueError("needs a cubic over a prime field")
    g = f.monic()
    c0, c1, c2 = (int(g.coeff_at(e)) for e in range(3))
    a = field(c1) - field(c2) ** 2 / field(3)
    b = field(c0) - field(c1) * field(c2) / field(3) + field(2) * field(c2) ** 3 / field(27)
    return elliptic_point_count_prank(field.p, int(a), int(b))
