"""
Univariate Polynomials over F_{p^k}

Dense polynomials with coefficients stored as field encodings, constant
term first. Arithmetic runs on the encodings; FieldElement views are built
only at the public boundary.

The square-free decomposition works in positive characteristic: once the
gcd with the derivative stops separating factors, the remainder is a p-th
power, so its p-th root is taken and the recovered multiplicities are scaled
by p.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass, field as dataclass_field

from .errors import MixedFieldError, PolynomialDivisionError, PolynomialError, ZeroPolynomialError
from .finite_field import FieldElement

logger = logging.getLogger(__name__)


def _trim(values):
    while values and values[-1] == 0:
        values.pop()
    return values


class Polynomial:
    """A polynomial over a FieldDescriptor; immutable."""

    __slots__ = ("field", "_values")

    def __init__(self, field, coefficients=()):
        self.field = field
        self._values = tuple(_trim([field(c).value for c in coefficients]))

    @classmethod
    def _from_values(cls, field, values):
        poly = cls.__new__(cls)
        poly.field = field
        poly._values = tuple(_trim(list(values)))
        return poly

    @classmethod
    def zero(cls, field):
        return cls._from_values(field, ())

    @classmethod
    def one(cls, field):
        return cls._from_values(field, (1,))

    @classmethod
    def x(cls, field):
        return cls._from_values(field, (0, 1))

    @classmethod
    def constant(cls, field, c):
        return cls(field, [c])

    # Views

    @property
    def values(self):
        """Coefficient encodings, constant term first."""
        return self._values

    @property
    def coefficients(self):
        return tuple(FieldElement(self.field, v) for v in self._values)

    @property
    def degree(self):
        """Degree, with -inf for the zero polynomial."""
        return len(self._values) - 1 if self._values else -math.inf

    @property
    def leading(self):
        if not self._values:
            raise ZeroPolynomialError("leading coefficient")
        return FieldElement(self.field, self._values[-1])

    def is_zero(self):
        return not self._values

    def is_constant(self):
        return len(self._values) <= 1

    def is_monic(self):
        return bool(self._values) and self._values[-1] == 1

    def coeff_at(self, e):
        """Coefficient of x^e; zero outside [0, degree]."""
        if 0 <= e < len(self._values):
            return FieldElement(self.field, self._values[e])
        return self.field.zero

    # Arithmetic

    def _check(self, other):
        if isinstance(other, Polynomial):
            if other.field != self.field:
                raise MixedFieldError(self.field, other.field)
            return other
        if isinstance(other, (int, FieldElement)):
            return Polynomial(self.field, [other])
        return None

    def __add__(self, other):
        other = self._check(other)
        if other is None:
            return NotImplemented
        a, b = self._values, other._values
        if len(a) < len(b):
            a, b = b, a
        add = self.field._add
        out = list(a)
        for i, v in enumerate(b):
            out[i] = add(out[i], v)
        return Polynomial._from_values(self.field, out)

    __radd__ = __add__

    def __neg__(self):
        neg = self.field._neg
        return Polynomial._from_values(self.field, [neg(v) for v in self._values])

    def __sub__(self, other):
        other = self._check(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._check(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = self._check(other)
        if other is None:
            return NotImplemented
        return Polynomial._from_values(self.field, _mul_values(self.field, self._values, other._values))

    __rmul__ = __mul__

    def __pow__(self, e):
        if e < 0:
            raise PolynomialError(f"negative polynomial exponent {e}")
        result = (1,)
        base = self._values
        while e:
            if e & 1:
                result = _mul_values(self.field, result, base)
            e >>= 1
            if e:
                base = _mul_values(self.field, base, base)
        return Polynomial._from_values(self.field, result)

    def scale(self, c):
        c = self.field(c).value
        mul = self.field._mul
        return Polynomial._from_values(self.field, [mul(c, v) for v in self._values])

    def divrem(self, other):
        """Return (quotient, remainder) with deg remainder < deg other."""
        other = self._check(other)
        if other.is_zero():
            raise PolynomialDivisionError()
        fld = self.field
        b = other._values
        db = len(b) - 1
        inv = fld._inv(b[-1])
        r = list(self._values)
        q = [0] * max(len(r) - db, 0)
        while r and len(r) - 1 >= db:
            shift = len(r) - 1 - db
            factor = fld._mul(r[-1], inv)
            q[shift] = factor
            for i, c in enumerate(b):
                if c:
                    r[shift + i] = fld._sub(r[shift + i], fld._mul(factor, c))
            _trim(r)
        return Polynomial._from_values(fld, q), Polynomial._from_values(fld, r)

    def __floordiv__(self, other):
        return self.divrem(other)[0]

    def __mod__(self, other):
        return self.divrem(other)[1]

    def monic(self):
        if self.is_zero():
            raise ZeroPolynomialError("monic normalization")
        return self.scale(self.leading.inverse())

    def derivative(self):
        fld = self.field
        p = fld.p
        return Polynomial._from_values(
            fld, [fld._mul(i % p, v) for i, v in enumerate(self._values)][1:]
        )

    def pth_root(self):
        """Exact p-th root of a polynomial whose nonzero terms sit at multiples of p."""
        fld = self.field
        p = fld.p
        for e, v in enumerate(self._values):
            if v and e % p:
                raise PolynomialError(f"{self} is not a p-th power")
        return Polynomial._from_values(
            fld, [fld._frobenius(v, fld.k - 1) for v in self._values[::p]]
        )

    def __call__(self, point):
        """Evaluate by Horner's rule."""
        fld = self.field
        x = fld(point).value
        acc = 0
        for v in reversed(self._values):
            acc = fld._add(fld._mul(acc, x), v)
        return FieldElement(fld, acc)

    def __eq__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.field == other.field and self._values == other._values

    def __hash__(self):
        return hash((self.field.p, self.field.k, self._values))

    def __str__(self):
        from .parser import poly_text
        return poly_text(self)

    def __repr__(self):
        return f"Polynomial({self.field}, {self})"


def _mul_values(field, a, b):
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    if field.k == 1:
        p = field.p
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return tuple(_trim([c % p for c in out]))
    add, mul = field._add, field._mul
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    out[i + j] = add(out[i + j], mul(x, y))
    return tuple(_trim(out))


def gcd(a, b):
    """Monic greatest common divisor; gcd(0, 0) = 0."""
    while not b.is_zero():
        a, b = b, a % b
    return a if a.is_zero() else a.monic()


@dataclass(frozen=True)
class SquareFreeDecomposition:
    """f = unit * prod(parts[j] ** j) with monic, square-free, coprime parts."""

    unit: FieldElement
    parts: dict = dataclass_field(default_factory=dict)

    def reconstruct(self):
        field = self.unit.field
        result = Polynomial.constant(field, self.unit)
        for j, part in self.parts.items():
            result = result * part ** j
        return result

    def degree(self):
        return sum(j * part.degree for j, part in self.parts.items())


def squarefree_decompose(f):
    """
    Split a nonzero polynomial into unit * prod f_j^j.

    Raises:
        ZeroPolynomialError: for f = 0
    """
    if f.is_zero():
        raise ZeroPolynomialError("square-free decomposition")
    parts = {}
    _collect_parts(f.monic(), 1, parts)
    ordered = {j: parts[j] for j in sorted(parts)}
    logger.debug("square-free parts of %s: %s", f, {j: str(g) for j, g in ordered.items()})
    return SquareFreeDecomposition(unit=f.leading, parts=ordered)


def _collect_parts(f, scale, parts):
    if f.degree < 1:
        return
    c = gcd(f, f.derivative())
    w = f // c
    i = 1
    while w.degree > 0:
        y = gcd(w, c)
        factor = w // y
        if factor.degree > 0:
            j = i * scale
            parts[j] = parts[j] * factor if j in parts else factor
        w = y
        c = c // y
        i += 1
    if c.degree > 0:
        # only p-th powers are left in c
        _collect_parts(c.pth_root(), scale * f.field.p, parts)
