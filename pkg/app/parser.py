"""
Polynomial Text Parser

Recursive descent parser for polynomials in x with integer coefficients:

    expr   := ['-'] term (('+' | '-') term)*
    term   := factor ('*' factor)*
    factor := base ('^' uint)?
    base   := uint | 'x' | '(' expr ')'

Integer literals are reduced into the prime field of the session field.
Whitespace is ignored. Errors report the byte offset into the input.
"""

from __future__ import annotations

import json

from .errors import ExponentOverflow, ParseError
from .polynomial import Polynomial

DEFAULT_EXPONENT_LIMIT = 4096
DEFAULT_DEGREE_LIMIT = 4096


class Token:
    """Token kinds and one token of input."""

    number = "number"
    variable = "x"
    plus = "+"
    minus = "-"
    times = "*"
    power = "^"
    left_paren = "("
    right_paren = ")"
    eof = "end of input"

    def __init__(self, kind, text, offset):
        self.kind = kind
        self.text = text
        self.offset = offset

    def __repr__(self):
        return f"({self.kind}, {self.text!r}, {self.offset})"


_SINGLE = {c: c for c in "+-*^()"}


def tokenize(text):
    """Split text into tokens; offsets are byte offsets into the UTF-8 encoding."""
    tokens = []
    data = text.encode("utf-8")
    pos = 0
    while pos < len(data):
        ch = chr(data[pos])
        if ch.isspace():
            pos += 1
        elif ch.isdigit():
            start = pos
            while pos < len(data) and chr(data[pos]).isdigit():
                pos += 1
            tokens.append(Token(Token.number, data[start:pos].decode(), start))
        elif ch == "x":
            tokens.append(Token(Token.variable, ch, pos))
            pos += 1
        elif ch in _SINGLE:
            tokens.append(Token(_SINGLE[ch], ch, pos))
            pos += 1
        else:
            raise ParseError(f"unexpected character {ch!r}", pos)
    tokens.append(Token(Token.eof, "", len(data)))
    return tokens


class Parser:
    """Parses one polynomial over a fixed field."""

    def __init__(self, field, text, exponent_limit=DEFAULT_EXPONENT_LIMIT, degree_limit=DEFAULT_DEGREE_LIMIT):
        self.field = field
        self.tokens = tokenize(text)
        self.pos = 0
        self.exponent_limit = exponent_limit
        self.degree_limit = degree_limit

    @property
    def current(self):
        return self.tokens[self.pos]

    def advance(self):
        token = self.tokens[self.pos]
        self.pos += 1
        return token

    def expect(self, kind):
        token = self.current
        if token.kind != kind:
            raise ParseError(f"expected {kind!r}, found {token.kind!r}", token.offset)
        return self.advance()

    def parse(self):
        result = self.expr()
        if self.current.kind != Token.eof:
            raise ParseError(f"unexpected {self.current.text!r}", self.current.offset)
        return result

    def expr(self):
        negate = False
        if self.current.kind == Token.minus:
            self.advance()
            negate = True
        result = self.term()
        if negate:
            result = -result
        while self.current.kind in (Token.plus, Token.minus):
            op = self.advance().kind
            rhs = self.term()
            result = result + rhs if op == Token.plus else result - rhs
        return result

    def term(self):
        result = self.factor()
        while self.current.kind == Token.times:
            offset = self.advance().offset
            rhs = self.factor()
            self._check_degree(result.degree + rhs.degree, offset)
            result = result * rhs
        return result

    def factor(self):
        base = self.base()
        if self.current.kind != Token.power:
            return base
        self.advance()
        token = self.expect(Token.number)
        exponent = int(token.text)
        if exponent > self.exponent_limit:
            raise ExponentOverflow(exponent, self.exponent_limit, token.offset)
        if base.degree > 0:
            self._check_degree(base.degree * exponent, token.offset)
        return base ** exponent

    def _check_degree(self, degree, offset):
        if degree > self.degree_limit:
            raise ExponentOverflow(degree, self.degree_limit, offset, what="degree")

    def base(self):
        token = self.current
        if token.kind == Token.number:
            self.advance()
            return Polynomial.constant(self.field, int(token.text))
        if token.kind == Token.variable:
            self.advance()
            return Polynomial.x(self.field)
        if token.kind == Token.left_paren:
            self.advance()
            inner = self.expr()
            self.expect(Token.right_paren)
            return inner
        raise ParseError(f"expected a number, 'x' or '(', found {token.kind!r}", token.offset)


def parse_poly(text, field, exponent_limit=DEFAULT_EXPONENT_LIMIT, degree_limit=DEFAULT_DEGREE_LIMIT):
    """
    Parse text into a Polynomial over field.

    Raises:
        ParseError: syntax error, with the byte offset
        ExponentOverflow: an exponent above exponent_limit, or a power or
            product whose degree would exceed degree_limit
    """
    return Parser(field, text, exponent_limit, degree_limit).parse()


def format_poly(poly):
    """
    Canonical text of a polynomial with prime-field coefficients,
    highest degree first, e.g. x^5+4*x.
    """
    p = poly.field.p
    terms = []
    for e in range(len(poly.values) - 1, -1, -1):
        v = poly.values[e]
        if v == 0:
            continue
        if v >= p:
            raise ValueError(f"coefficient of x^{e} is outside the prime field")
        if e == 0:
            terms.append(str(v))
            continue
        mono = "x" if e == 1 else f"x^{e}"
        terms.append(mono if v == 1 else f"{v}*{mono}")
    return "+".join(terms) or "0"


def poly_text(poly):
    """format_poly when possible, otherwise the coefficient serialization."""
    if all(v < poly.field.p for v in poly.values):
        return format_poly(poly)
    return json.dumps([c.to_json() for c in poly.coefficients], separators=(",", ":"))
