"""
Invariant Bounds

Orbits of multiplication by p on Z/nZ minus zero, and the bounds on the
a-number and p-rank that follow from the block shape of Frobenius. None of
these need the matrix itself: they use m_i and deg Q_i only.
"""

from __future__ import annotations

import logging
from math import gcd

from pydantic import BaseModel, Field

from .errors import CharacteristicDividesDegree, DegreeViolation
from .kummer import frobenius_polynomial_degree, ramification_profile

logger = logging.getLogger(__name__)


class OrbitDecomposition(BaseModel):
    """Partition of {1, ..., n-1} into orbits of s -> ps mod n."""

    n: int
    p: int
    orbits: list[list[int]]
    order: int = Field(description="multiplicative order of p mod n")

    def orbit_of(self, i):
        for orbit in self.orbits:
            if i in orbit:
                return orbit
        raise KeyError(i)


class BlockBound(BaseModel):
    i: int
    m: int
    target: int
    deg_q: int
    q: int
    v: int
    rank_lower: int
    rank_upper: int


class BoundsReport(BaseModel):
    a_lower: int
    a_upper: int
    f_upper: int
    f_upper_unweighted: int
    rank_upper: int
    per_block: list[BlockBound]


def orbits(n, p):
    if n < 2:
        raise ValueError(f"n must be at least 2, got {n}")
    if gcd(n, p) != 1:
        raise CharacteristicDividesDegree(n, p)
    seen = set()
    result = []
    for start in range(1, n):
        if start in seen:
            continue
        orbit = []
        s = start
        while s not in seen:
            seen.add(s)
            orbit.append(s)
            s = s * p % n
        result.append(sorted(orbit))
    result.sort(key=lambda o: o[0])

    order = 1
    power = p % n
    while power != 1 % n:
        power = power * p % n
        order += 1
    return OrbitDecomposition(n=n, p=p, orbits=result, order=order)


def a_number_lower_bound(profile, n, p):
    """1 - n + sum of max(1, m_i - m_{pi mod n} + 1)."""
    return 1 - n + sum(
        max(1, profile.m_of(i) - profile.m_of(p * i % n) + 1) for i in range(1, n)
    )


def p_rank_upper_bound(profile, decomposition):
    """
    Sum over orbits of |orbit| * min(m_i - 1).

    The rank of F^m on each block of an orbit is the same, so every
    block of the orbit counts.
    """
    return sum(len(orbit) * min(profile.m_of(i) - 1 for i in orbit) for orbit in decomposition.orbits)


def p_rank_upper_bound_unweighted(profile, decomposition):
    return sum(min(profile.m_of(i) - 1 for i in orbit) for orbit in decomposition.orbits)


def _block_lower(deg_q, m_source, m_target, p):
    q = (deg_q + m_target - 1) // p
    v = deg_q // p
    return q, v, max(0, min(q - v, m_source - 1 - v))


def a_number_upper_bound(curve, profile=None):
    """
    All bounds for a validated curve, with the per-block numbers behind them.

    Returns:
        BoundsReport: a_lower, a_upper, f_upper (orbit weighted) and the
        per-block rows (m_i, deg Q_i, q_i, v_i, rank window)
    """
    profile = profile or ramification_profile(curve)
    n, p = curve.n, curve.p
    rows = []
    a_upper = 1 - n
    for i in range(1, n):
        target = p * i % n
        m_source, m_target = profile.m_of(i), profile.m_of(target)
        deg_q = frobenius_polynomial_degree(curve, i)
        q, v, lower = _block_lower(deg_q, m_source, m_target, p)
        a_upper += min(m_source, max(m_source - q + v, 1 + v))
        rows.append(BlockBound(
            i=i,
            m=m_source,
            target=target,
            deg_q=deg_q,
            q=q,
            v=v,
            rank_lower=lower,
            rank_upper=max(min(m_source - 1, m_target - 1), 0),
        ))

    decomposition = orbits(n, p)
    report = BoundsReport(
        a_lower=a_number_lower_bound(profile, n, p),
        a_upper=a_upper,
        f_upper=p_rank_upper_bound(profile, decomposition),
        f_upper_unweighted=p_rank_upper_bound_unweighted(profile, decomposition),
        rank_upper=sum(row.rank_upper for row in rows),
        per_block=rows,
    )
    if report.a_lower > report.a_upper:
        raise AssertionError(f"a-number bounds crossed: {report.a_lower} > {report.a_upper}")
    return report


def ekedahl_block_bound(p, g, degree):
    """
    Block rank lower bound for y^2 = f with f square-free of the given degree.

    Only degree data enters: m_1 = ceil(degree/2) and deg Q_1 = degree*(p-1)/2.
    """
    if p == 2:
        raise ValueError("hyperelliptic curves in characteristic 2 use the char2 model")
    if degree not in (2 * g + 1, 2 * g + 2):
        raise DegreeViolation(f"degree {degree} does not give genus {g} for n = 2")
    m = -(-degree // 2)
    deg_q = degree * (p - 1) // 2
    return _block_lower(deg_q, m, m, p)[2]


def ekedahl_table(primes=(3, 5, 7, 11, 13), max_genus=6):
    """
    Rows (p, g, degree, block lower bound) for (p+1)/2 <= g <= max_genus.

    For odd degree a positive bound rules out superspecial curves.
    """
    rows = []
    for p in primes:
        for g in range((p + 1) // 2, max_genus + 1):
            for degree in (2 * g + 1, 2 * g + 2):
                rows.append((p, g, degree, ekedahl_block_bound(p, g, degree)))
    logger.debug("ekedahl table with %d rows", len(rows))
    return rows
