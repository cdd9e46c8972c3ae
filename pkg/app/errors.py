"""
Error types for kummer-hw.

Validation failures (bad input, invalid curves, oversized searches) are
exceptions from this module; internal invariant breaches are plain
AssertionError so the CLI can tell "invalid input" from "bug".
"""


class KummerHWError(Exception):
    """Base class for every error raised on purpose by this package."""


# Finite fields

class FieldError(KummerHWError):
    """Invalid field parameters or field arithmetic."""


class NotPrimeError(FieldError):
    def __init__(self, p):
        self.p = p
        super().__init__(f"characteristic {p} is not prime")


class MixedFieldError(FieldError):
    def __init__(self, left, right):
        self.left = left
        self.right = right
        super().__init__(f"cannot combine elements of {left} and {right}")


class FieldInversionError(FieldError, ZeroDivisionError):
    def __init__(self, field):
        self.field = field
        super().__init__(f"inversion of zero in {field}")


# Polynomials

class PolynomialError(KummerHWError):
    """Invalid polynomial operation."""


class PolynomialDivisionError(PolynomialError, ZeroDivisionError):
    def __init__(self):
        super().__init__("division by the zero polynomial")


class ZeroPolynomialError(PolynomialError):
    def __init__(self, operation):
        self.operation = operation
        super().__init__(f"{operation} is undefined for the zero polynomial")


# Curves

class CurveValidationError(KummerHWError):
    """The input does not define a curve of the requested kind."""


class CharacteristicDividesDegree(CurveValidationError):
    def __init__(self, n, p):
        self.n = n
        self.p = p
        super().__init__(
            f"CharacteristicDividesDegree: gcd(n={n}, p={p}) != 1, "
            f"a Kummer cover needs the characteristic to be prime to n"
        )


class ReduciblePolynomial(CurveValidationError):
    def __init__(self, d, reason=None):
        self.d = d
        detail = reason or f"f is a d-th power in k(x) with d = {d}"
        super().__init__(
            f"ReduciblePolynomial: Z^n - f is reducible ({detail}); "
            f"divide n by {d} and take the corresponding root of f"
        )


class ZeroPolynomial(CurveValidationError):
    def __init__(self):
        super().__init__("ZeroPolynomial: f must be nonzero")


class DegenerateCover(CurveValidationError):
    def __init__(self, n, e=None):
        self.n = n
        self.e = n if e is None else e
        super().__init__(
            f"DegenerateCover: f is a constant times an e-th power with e = {self.e} dividing n = {n}, "
            f"so y^{n} = f is not a geometrically irreducible cover of the projective line"
        )


class WrongCharacteristic(CurveValidationError):
    def __init__(self, p, expected=2):
        self.p = p
        super().__init__(f"WrongCharacteristic: expected p = {expected}, got p = {p}")


class DegreeViolation(CurveValidationError):
    def __init__(self, condition):
        self.condition = condition
        super().__init__(f"DegreeViolation: {condition}")


class NotSmooth(CurveValidationError):
    def __init__(self, condition):
        self.condition = condition
        super().__init__(f"NotSmooth: {condition}")


# Input text

class ParseError(KummerHWError):
    def __init__(self, message, offset):
        self.offset = offset
        super().__init__(f"{message} at byte {offset}")


class ExponentOverflow(ParseError):
    def __init__(self, exponent, limit, offset, what="exponent"):
        self.exponent = exponent
        self.limit = limit
        super().__init__(f"exponent overflow: {what} {exponent} exceeds the limit {limit}", offset)


# Orbits and searches

class OrbitError(KummerHWError):
    """A residue set is not an orbit of multiplication by p."""


class SearchSpaceTooLarge(KummerHWError):
    def __init__(self, cardinality, limit):
        self.cardinality = cardinality
        self.limit = limit
        super().__init__(
            f"search space has {cardinality} candidates, above the limit {limit}"
        )
