"""
Finite Field Arithmetic

Exact arithmetic in F_{p^k}. A field is fixed by (p, k): the modulus is the
lexicographically smallest monic irreducible polynomial of degree k over F_p,
so every run builds the same model of the field.

Elements store the integer encoding c_0 + c_1*p + ... + c_{k-1}*p^(k-1) of
their coordinates in the power basis of the modulus. Small extension fields
get log/antilog tables; the arithmetic they implement is the same.
"""

from __future__ import annotations

import logging
from functools import lru_cache
from itertools import product
from math import gcd

from .config import get_settings
from .errors import FieldError, FieldInversionError, MixedFieldError, NotPrimeError

logger = logging.getLogger(__name__)


def is_prime(n):
    """Trial division; characteristics here are small."""
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def prime_factors(n):
    """Distinct prime factors of n in ascending order."""
    factors = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            factors.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        factors.append(n)
    return factors


# Int-list polynomials over F_p, constant coefficient first. Only the field
# construction needs these; everything else goes through app.polynomial.

def _trim(c):
    while c and c[-1] == 0:
        c.pop()
    return c


def _polymul_p(a, b, p):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _trim([c % p for c in out])


def _polymod_p(a, m, p):
    r = _trim([c % p for c in a])
    dm = len(m) - 1
    inv = pow(m[-1], -1, p)
    while len(r) - 1 >= dm:
        factor = r[-1] * inv % p
        shift = len(r) - 1 - dm
        for i, c in enumerate(m):
            r[shift + i] = (r[shift + i] - factor * c) % p
        _trim(r)
    return r


def _polygcd_p(a, b, p):
    a, b = _trim([c % p for c in a]), _trim([c % p for c in b])
    while b:
        a, b = b, _polymod_p(a, b, p)
    if not a:
        return []
    inv = pow(a[-1], -1, p)
    return [c * inv % p for c in a]


def _powmod_p(base, e, m, p):
    result = [1]
    base = _polymod_p(base, m, p)
    while e:
        if e & 1:
            result = _polymod_p(_polymul_p(result, base, p), m, p)
        base = _polymod_p(_polymul_p(base, base, p), m, p)
        e >>= 1
    return result


def is_irreducible_mod_p(coeffs, p):
    """
    Rabin-style irreducibility test over F_p.

    A polynomial g of degree k is irreducible iff gcd(g, x^(p^i) - x) = 1
    for every i <= k/2.
    """
    g = _trim([int(c) % p for c in coeffs])
    k = len(g) - 1
    if k < 1:
        return False
    h = [0, 1]
    for _ in range(k // 2):
        h = _powmod_p(h, p, g, p)
        diff = list(h) + [0] * max(0, 2 - len(h))
        diff[1] = (diff[1] - 1) % p
        if _polygcd_p(g, _trim(diff), p) != [1]:
            return False
    return True


def format_int_poly(coeffs, var="x"):
    """Render constant-first integer coefficients, e.g. (1, 1, 1) -> x^2+x+1."""
    terms = []
    for e in range(len(coeffs) - 1, -1, -1):
        c = coeffs[e]
        if c == 0:
            continue
        if e == 0:
            terms.append(str(c))
        else:
            mono = var if e == 1 else f"{var}^{e}"
            terms.append(mono if c == 1 else f"{c}*{mono}")
    return "+".join(terms) or "0"


class FieldDescriptor:
    """The finite field F_{p^k} = F_p[x]/(modulus)."""

    def __init__(self, p, k, modulus):
        if not is_prime(p):
            raise NotPrimeError(p)
        if k < 1:
            raise FieldError(f"extension degree must be at least 1, got {k}")
        modulus = tuple(int(c) % p for c in modulus)
        if len(modulus) != k + 1 or modulus[-1] != 1:
            raise FieldError(f"modulus {modulus} is not monic of degree {k}")
        if not is_irreducible_mod_p(modulus, p):
            raise FieldError(f"modulus {format_int_poly(modulus)} is reducible over F_{p}")

        self.p = p
        self.k = k
        self.modulus = modulus
        self.order = p ** k
        self._powers = tuple(p ** i for i in range(k))
        self._exp = None
        self._log = None
        if k > 1 and self.order <= get_settings().table_limit:
            self._build_tables()

        self.zero = FieldElement(self, 0)
        self.one = FieldElement(self, 1)

    # Encoding

    def _digits(self, v):
        out = []
        for _ in range(self.k):
            v, c = divmod(v, self.p)
            out.append(c)
        return out

    def _encode(self, coords):
        return sum(c * w for c, w in zip(coords, self._powers))

    # Arithmetic on encodings. Polynomial and matrix code call these
    # directly in inner loops to avoid building FieldElement objects.

    def _add(self, a, b):
        if self.k == 1:
            return (a + b) % self.p
        if self.p == 2:
            return a ^ b
        p = self.p
        da, db = self._digits(a), self._digits(b)
        return self._encode([(x + y) % p for x, y in zip(da, db)])

    def _neg(self, a):
        if self.k == 1:
            return -a % self.p
        if self.p == 2:
            return a
        p = self.p
        return self._encode([-c % p for c in self._digits(a)])

    def _sub(self, a, b):
        return self._add(a, self._neg(b))

    def _mul(self, a, b):
        if self.k == 1:
            return a * b % self.p
        if not a or not b:
            return 0
        if self._exp is not None:
            return self._exp[(self._log[a] + self._log[b]) % (self.order - 1)]
        return self._mul_coords(a, b)

    def _mul_coords(self, a, b):
        prod = _polymul_p(self._digits(a), self._digits(b), self.p)
        return self._encode(_polymod_p(prod, self.modulus, self.p))

    def _pow(self, a, e):
        result = 1
        while e:
            if e & 1:
                result = self._mul(result, a)
            a = self._mul(a, a)
            e >>= 1
        return result

    def _inv(self, a):
        if a == 0:
            raise FieldInversionError(self)
        if self.k == 1:
            return pow(a, -1, self.p)
        if self._exp is not None:
            return self._exp[-self._log[a] % (self.order - 1)]
        return self._pow(a, self.order - 2)

    def _frobenius(self, a, e):
        e %= self.k
        if e == 0 or a == 0:
            return a
        if self._exp is not None:
            return self._exp[self._log[a] * self.p ** e % (self.order - 1)]
        return self._pow(a, self.p ** e)

    def _build_tables(self):
        q = self.order
        factors = prime_factors(q - 1)
        for g in range(2, q):
            if all(self._pow(g, (q - 1) // r) != 1 for r in factors):
                break
        else:
            raise AssertionError(f"no primitive element found in {self}")
        exp = [1] * (q - 1)
        for i in range(1, q - 1):
            exp[i] = self._mul_coords(exp[i - 1], g)
        log = [0] * q
        for i, v in enumerate(exp):
            log[v] = i
        self._exp, self._log = exp, log
        logger.debug("built log tables for %s with primitive element %s", self, self._digits(g))

    # Elements

    def __call__(self, value):
        """Coerce an int (into the prime subfield) or a coordinate sequence."""
        if isinstance(value, FieldElement):
            if value.field != self:
                raise MixedFieldError(value.field, self)
            return value
        if isinstance(value, int):
            return FieldElement(self, value % self.p)
        return self.from_coefficients(value)

    def from_coefficients(self, coords):
        coords = [int(c) % self.p for c in coords]
        if len(coords) > self.k:
            raise FieldError(f"{len(coords)} coordinates given for a degree-{self.k} field")
        return FieldElement(self, self._encode(coords))

    def from_index(self, v):
        if not 0 <= v < self.order:
            raise FieldError(f"encoding {v} outside [0, {self.order})")
        return FieldElement(self, v)

    @property
    def gen(self):
        """The class of x modulo the defining polynomial."""
        return self.from_coefficients([0, 1]) if self.k > 1 else FieldElement(self, -self.modulus[0] % self.p)

    def elements(self):
        for v in range(self.order):
            yield FieldElement(self, v)

    def nonzero_elements(self):
        for v in range(1, self.order):
            yield FieldElement(self, v)

    def is_power(self, a, d):
        """True when the nonzero element a is a d-th power in this field."""
        a = self(a)
        if a.is_zero():
            return True
        q = self.order
        return a ** ((q - 1) // gcd(d, q - 1)) == 1

    def modulus_text(self):
        return format_int_poly(self.modulus)

    def __eq__(self, other):
        if self is other:
            return True
        if not isinstance(other, FieldDescriptor):
            return NotImplemented
        return (self.p, self.k, self.modulus) == (other.p, other.k, other.modulus)

    def __hash__(self):
        return hash((self.p, self.k, self.modulus))

    def __str__(self):
        return f"F_{self.order}"

    def __repr__(self):
        if self.k == 1:
            return f"FieldDescriptor(F_{self.p})"
        return f"FieldDescriptor(F_{self.order} = F_{self.p}[x]/({self.modulus_text()}))"


class FieldElement:
    """An element of a FieldDescriptor; immutable."""

    __slots__ = ("field", "value")

    def __init__(self, field, value):
        self.field = field
        self.value = value

    def _coerce(self, other):
        if isinstance(other, FieldElement):
            if other.field is not self.field and other.field != self.field:
                raise MixedFieldError(self.field, other.field)
            return other.value
        if isinstance(other, int):
            return other % self.field.p
        return None

    @property
    def coefficients(self):
        return tuple(self.field._digits(self.value))

    def is_zero(self):
        return self.value == 0

    def __bool__(self):
        return self.value != 0

    def __add__(self, other):
        v = self._coerce(other)
        if v is None:
            return NotImplemented
        return FieldElement(self.field, self.field._add(self.value, v))

    __radd__ = __add__

    def __sub__(self, other):
        v = self._coerce(other)
        if v is None:
            return NotImplemented
        return FieldElement(self.field, self.field._sub(self.value, v))

    def __rsub__(self, other):
        v = self._coerce(other)
        if v is None:
            return NotImplemented
        return FieldElement(self.field, self.field._sub(v, self.value))

    def __mul__(self, other):
        v = self._coerce(other)
        if v is None:
            return NotImplemented
        return FieldElement(self.field, self.field._mul(self.value, v))

    __rmul__ = __mul__

    def __truediv__(self, other):
        v = self._coerce(other)
        if v is None:
            return NotImplemented
        return FieldElement(self.field, self.field._mul(self.value, self.field._inv(v)))

    def __rtruediv__(self, other):
        v = self._coerce(other)
        if v is None:
            return NotImplemented
        return FieldElement(self.field, self.field._mul(v, self.field._inv(self.value)))

    def __neg__(self):
        return FieldElement(self.field, self.field._neg(self.value))

    def __pow__(self, e):
        """Square-and-multiply; negative exponents go through the inverse."""
        base = self.value
        if e < 0:
            base, e = self.field._inv(base), -e
        return FieldElement(self.field, self.field._pow(base, e))

    def inverse(self):
        return FieldElement(self.field, self.field._inv(self.value))

    def frobenius(self, e=1):
        return frobenius(self, e)

    def __eq__(self, other):
        v = self._coerce(other)
        if v is None:
            return NotImplemented
        return self.value == v

    def __hash__(self):
        return hash((self.field.p, self.field.k, self.value))

    def __int__(self):
        if self.value >= self.field.p:
            raise FieldError(f"{self!r} is not in the prime field")
        return self.value

    def to_json(self):
        """Prime-field elements as an int, others as [c_0, ..., c_{k-1}]."""
        if self.field.k == 1:
            return self.value
        return list(self.coefficients)

    def __str__(self):
        if self.field.k == 1:
            return str(self.value)
        return "[" + ",".join(str(c) for c in self.coefficients) + "]"

    def __repr__(self):
        return f"FieldElement({self.field}, {self})"


@lru_cache(maxsize=None)
def make_field(p, k=1):
    """
    Build F_{p^k} with the lexicographically smallest monic irreducible modulus.

    Candidates are compared as the tuple (c_{k-1}, ..., c_0) of least
    residues, so for k = 1 the modulus is x and F_4 gets x^2 + x + 1.
    """
    if not is_prime(p):
        raise NotPrimeError(p)
    if k < 1:
        raise FieldError(f"extension degree must be at least 1, got {k}")
    for high_to_low in product(range(p), repeat=k):
        modulus = tuple(reversed(high_to_low)) + (1,)
        if is_irreducible_mod_p(modulus, p):
            logger.debug("F_%d^%d modulus %s", p, k, format_int_poly(modulus))
            return FieldDescriptor(p, k, modulus)
    raise AssertionError(f"no irreducible polynomial of degree {k} over F_{p}")


def frobenius(a, e=1):
    """Return a^(p^e); frobenius(a, k) is the identity on F_{p^k}."""
    if e < 0:
        raise FieldError(f"Frobenius exponent must be nonnegative, got {e}")
    return FieldElement(a.field, a.field._frobenius(a.value, e))
