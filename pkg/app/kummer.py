"""
Kummer Covers of the Projective Line

Validation of y^n = f(x) over F_{p^k}, the ramification profile m_i, the
genus, the polynomials Q_i and the matrix of Frobenius on H^1(C, O_C).

The basis of H^1 is y^i / (prod f_j^floor(ji/n) * x^t) for i = 1..n-1 and
t = 1..m_i - 1, ordered by i and then t. The block B_i holds the basis
elements with first index i, and Frobenius sends B_i into B_{pi mod n}.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from math import gcd

from .errors import (
    CharacteristicDividesDegree,
    CurveValidationError,
    DegenerateCover,
    ReduciblePolynomial,
    ZeroPolynomial,
)
from .finite_field import prime_factors
from .polynomial import Polynomial, SquareFreeDecomposition, squarefree_decompose
from .semilinear import TwistedMatrix

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class KummerCurve:
    """
    A validated cover y^n = f(x).

    f and decomposition are reduced: every multiplicity lies in 1..n-1.
    The input polynomial equals f * discarded^n.
    """

    field: object
    n: int
    f: Polynomial
    decomposition: SquareFreeDecomposition
    original: Polynomial
    discarded: Polynomial

    @property
    def p(self):
        return self.field.p

    @property
    def degree(self):
        return self.f.degree


@dataclass(frozen=True)
class RamificationProfile:
    m: tuple
    genus: int

    def m_of(self, i):
        """m_i for i taken mod n; m_0 is never used."""
        n = len(self.m) + 1
        return self.m[i % n - 1]


@dataclass(frozen=True)
class BlockIndex:
    i: int
    dim: int
    offset: int


@dataclass(frozen=True)
class GenusBounds:
    lower: int
    upper: int


def validate_kummer(field, n, f):
    """
    Check that y^n = f defines a Kummer cover over the field.

    Multiplicities are reduced mod n first; the discarded n-th power
    does not change the function field.

    Raises:
        CharacteristicDividesDegree: p divides n
        ZeroPolynomial: f = 0
        ReduciblePolynomial: Z^n - f factors over k(x)
        DegenerateCover: f is a constant times a power sharing a factor with n
    """
    if n < 2:
        raise CurveValidationError(f"cover degree must be at least 2, got {n}")
    if gcd(n, field.p) != 1:
        raise CharacteristicDividesDegree(n, field.p)
    if f.is_zero():
        raise ZeroPolynomial()

    decomposition = squarefree_decompose(f)
    unit = decomposition.unit

    reduced = {}
    discarded = Polynomial.one(field)
    for j, part in decomposition.parts.items():
        q, r = divmod(j, n)
        if q:
            discarded = discarded * part ** q
        if r:
            reduced[r] = reduced[r] * part if r in reduced else part
    reduced = {j: reduced[j] for j in sorted(reduced)}

    multiplicities = list(reduced)
    for d in prime_factors(n):
        if all(j % d == 0 for j in multiplicities) and field.is_power(unit, d):
            raise ReduciblePolynomial(d)
    if n % 4 == 0 and all(j % 4 == 0 for j in multiplicities):
        if field.is_power(unit / field(-4), 4):
            raise ReduciblePolynomial(2, reason="f lies in -4*k(x)^4")

    e = n
    for j in multiplicities:
        e = gcd(e, j)
    if e > 1:
        raise DegenerateCover(n, e)

    reduced_f = Polynomial.constant(field, unit)
    for j, part in reduced.items():
        reduced_f = reduced_f * part ** j

    curve = KummerCurve(
        field=field,
        n=n,
        f=reduced_f,
        decomposition=SquareFreeDecomposition(unit=unit, parts=reduced),
        original=f,
        discarded=discarded,
    )
    logger.debug("validated y^%d = %s over %s", n, reduced_f, field)
    return curve


def ramification_profile(curve):
    n = curve.n
    d = curve.degree
    parts = curve.decomposition.parts
    m = []
    for i in range(1, n):
        value = -(-i * d // n) - sum(part.degree * (j * i // n) for j, part in parts.items())
        if value < 1:
            raise AssertionError(f"m_{i} = {value} on a validated curve")
        m.append(value)
    genus = sum(m) - n + 1
    return RamificationProfile(m=tuple(m), genus=genus)


def block_indices(profile):
    """BlockIndex for every i = 1..n-1, offsets consecutive in i."""
    blocks = []
    offset = 0
    for i, mi in enumerate(profile.m, start=1):
        dim = max(mi - 1, 0)
        blocks.append(BlockIndex(i=i, dim=dim, offset=offset))
        offset += dim
    return blocks


def frobenius_exponents(curve, i):
    """
    Exponents of Q_i = u^a * prod f_j^(e_j) and the target residue i'.

    Returns:
        tuple: (a, {j: e_j}, i')
    """
    n, p = curve.n, curve.p
    if not 1 <= i < n:
        raise ValueError(f"residue {i} outside 1..{n - 1}")
    base = p * i // n
    target = p * i % n
    exponents = {}
    for j in curve.decomposition.parts:
        e = j * base - p * (j * i // n) + (j * target // n)
        if e < 0:
            raise AssertionError(f"negative exponent {e} for f_{j} in Q_{i}")
        exponents[j] = e
    return base, exponents, target


def frobenius_polynomial_degree(curve, i):
    _, exponents, _ = frobenius_exponents(curve, i)
    parts = curve.decomposition.parts
    return sum(parts[j].degree * e for j, e in exponents.items())


def frobenius_polynomial(curve, i):
    """Q_i built multiplicatively from the square-free parts, with i' = pi mod n."""
    base, exponents, target = frobenius_exponents(curve, i)
    q = Polynomial.constant(curve.field, curve.decomposition.unit ** base)
    for j, e in exponents.items():
        if e:
            q = q * curve.decomposition.parts[j] ** e
    return q, target


def hasse_witt_matrix(curve, profile=None):
    """
    Matrix of Frobenius on H^1(C, O_C) in the (i, t) basis.

    Column (i, t) holds the image of that basis element: the entry in row
    (i', w) is the coefficient of x^(pt - w) in Q_i.

    Returns:
        tuple: (TwistedMatrix, list of BlockIndex)
    """
    profile = profile or ramification_profile(curve)
    blocks = block_indices(profile)
    p = curve.p
    g = profile.genus
    rows = [[0] * g for _ in range(g)]
    for block in blocks:
        if block.dim == 0:
            continue
        target = blocks[p * block.i % curve.n - 1]
        if target.dim == 0:
            continue
        q, _ = frobenius_polynomial(curve, block.i)
        coeffs = q.values
        for t in range(1, block.dim + 1):
            col = block.offset + t - 1
            for w in range(1, target.dim + 1):
                e = p * t - w
                if 0 <= e < len(coeffs):
                    rows[target.offset + w - 1][col] = coeffs[e]
    matrix = TwistedMatrix._from_values(curve.field, rows, 1)
    logger.debug("Hasse-Witt matrix of genus %d with %d nonzero entries", g, len(matrix.nonzero_entries()))
    return matrix, blocks


def genus_bounds(curve):
    """
    Bounds on the genus from n and deg f alone.

    The upper bound (n-1)(deg f - 1)/2 always holds; the lower bound
    (n-1)(deg f - 2)/2 needs f square-free, otherwise it is 0.
    """
    n, d = curve.n, curve.degree
    upper = (n - 1) * (d - 1) // 2
    if set(curve.decomposition.parts) == {1}:
        lower = max(-(-(n - 1) * (d - 2) // 2), 0)
    else:
        lower = 0
    return GenusBounds(lower=lower, upper=upper)


def basis_labels(curve, profile=None):
    """Text label of every basis element in matrix order."""
    profile = profile or ramification_profile(curve)
    n = curve.n
    labels = []
    for i, mi in enumerate(profile.m, start=1):
        factors = [
            f"({part})^{j * i // n}"
            for j, part in curve.decomposition.parts.items()
            if j * i // n
        ]
        for t in range(1, mi):
            labels.append(f"y^{i}/(" + "*".join(factors + [f"x^{t}"]) + ")")
    return labels
