"""
Hyperelliptic Curves in Characteristic 2

Curves y^2 + Q(x) y = P(x) over F_{2^k}, ramified at infinity, with
deg Q <= g and deg P = 2g + 1. Frobenius on H^1 in the basis y/x^i,
i = 1..g, only depends on Q.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from itertools import product

from pydantic import BaseModel

from .config import get_settings
from .errors import CurveValidationError, DegreeViolation, NotSmooth, WrongCharacteristic
from .finite_field import make_field
from .polynomial import Polynomial, gcd
from .semilinear import TwistedMatrix, invariants

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ArtinSchreierHyperelliptic:
    field: object
    g: int
    Q: Polynomial
    P: Polynomial


def validate_char2(field, g, Q, P):
    """
    Check the model y^2 + Qy = P.

    Raises:
        WrongCharacteristic: the field does not have characteristic 2
        DegreeViolation: g < 1, deg Q > g or deg P != 2g + 1
        NotSmooth: Q shares a factor with (Q')^2 P + (P')^2
    """
    if field.p != 2:
        raise WrongCharacteristic(field.p)
    if g < 1:
        raise DegreeViolation(f"g >= 1 (got g = {g})")
    if Q.degree > g:
        raise DegreeViolation(f"deg Q <= g (deg Q = {Q.degree}, g = {g})")
    if P.degree != 2 * g + 1:
        raise DegreeViolation(f"deg P = 2g + 1 = {2 * g + 1} (deg P = {P.degree})")
    if Q.is_zero():
        raise NotSmooth("Q != 0")
    dq, dp = Q.derivative(), P.derivative()
    common = gcd(Q, dq * dq * P + dp * dp)
    if common.degree > 0:
        raise NotSmooth(f"gcd(Q, (Q')^2 P + (P')^2) = 1 (common factor {common})")
    return ArtinSchreierHyperelliptic(field=field, g=g, Q=Q, P=P)


def frobenius_matrix_from_q(field, g, Q):
    """Entry in row j, column i (1-based) is the coefficient of x^(2i - j) in Q."""
    coeffs = Q.values
    rows = [[0] * g for _ in range(g)]
    for i in range(1, g + 1):
        for j in range(1, g + 1):
            e = 2 * i - j
            if 0 <= e < len(coeffs):
                rows[j - 1][i - 1] = coeffs[e]
    return TwistedMatrix._from_values(field, rows, 1)


def char2_matrix(curve):
    return frobenius_matrix_from_q(curve.field, curve.g, curve.Q)


def _admissible(curve_field, g, Q, P):
    try:
        validate_char2(curve_field, g, Q, P)
    except CurveValidationError:
        return False
    return True


class Char2Census(BaseModel):
    """Outcome of a sweep over all (Q, P) for one field and genus."""

    order: int
    genus: int
    q_checked: int
    pairs_checked: int | None = None
    admissible: int | None = None
    nilpotent_q: list[list] = []
    nilpotent_a_numbers: list[int] = []
    superspecial: list[list] = []
    violations: list[str] = []

    @property
    def superspecial_allowed(self):
        """Superspecial hyperelliptic curves need g < (p+1)/2, so g = 1 here."""
        return self.genus < 3 / 2


def _p_candidates(field, g):
    q = field.order
    for tail in product(range(q), repeat=2 * g + 1):
        for lead in range(1, q):
            yield Polynomial._from_values(field, tail + (lead,))


def char2_sweep(k, g, exhaustive_pairs=None):
    """
    Sweep every nonzero Q of degree <= g over F_{2^k}.

    With exhaustive_pairs every P of degree 2g+1 is validated against
    every Q; otherwise P is only searched for the Q whose matrix is
    nilpotent, since the matrix depends on Q alone and a constant Q
    admits every P.
    """
    field = make_field(2, k)
    q = field.order
    pair_space = (q ** (g + 1) - 1) * (q - 1) * q ** (2 * g + 1)
    if exhaustive_pairs is None:
        exhaustive_pairs = pair_space <= get_settings().search_limit
    expected_a = (g + 1) // 2

    census = Char2Census(order=q, genus=g, q_checked=0)
    admissible_total = 0
    for q_values in product(range(q), repeat=g + 1):
        if not any(q_values):
            continue
        Q = Polynomial._from_values(field, q_values)
        census.q_checked += 1
        inv = invariants(frobenius_matrix_from_q(field, g, Q))

        witness = None
        if exhaustive_pairs:
            count = 0
            for P in _p_candidates(field, g):
                if _admissible(field, g, Q, P):
                    count += 1
                    witness = witness or P
            admissible_total += count
        elif inv.nilpotent or inv.superspecial:
            witness = next((P for P in _p_candidates(field, g) if _admissible(field, g, Q, P)), None)
        if witness is None:
            continue

        q_json = [c.to_json() for c in Q.coefficients]
        if inv.nilpotent:
            census.nilpotent_q.append(q_json)
            census.nilpotent_a_numbers.append(inv.a_number)
            if not Q.is_constant():
                census.violations.append(f"nilpotent matrix for nonconstant Q = {q_json}")
            if inv.a_number != expected_a:
                census.violations.append(f"a-number {inv.a_number} != {expected_a} for Q = {q_json}")
        if inv.superspecial:
            census.superspecial.append([q_json, [c.to_json() for c in witness.coefficients]])
            if not census.superspecial_allowed:
                census.violations.append(f"superspecial curve of genus {g}: Q = {q_json}")

    if exhaustive_pairs:
        census.pairs_checked = pair_space
        census.admissible = admissible_total
    logger.info(
        "char2 sweep F_%d g=%d: %d Q checked, %d nilpotent, %d violations",
        q, g, census.q_checked, len(census.nilpotent_q), len(census.violations),
    )
    return census
