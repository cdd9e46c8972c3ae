"""
Semilinear Algebra

Matrices of p-semilinear maps over F_{p^k}. A TwistedMatrix with twist e
represents v -> M * sigma^e(v), where sigma raises every coordinate to the
p-th power. Rank and kernel dimension are those of the entry grid; iterates
compose with the twist applied to each later factor.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass

from .errors import OrbitError
from .finite_field import FieldElement

logger = logging.getLogger(__name__)


class TwistedMatrix:
    """A square matrix over a finite field plus the Frobenius twist it carries."""

    __slots__ = ("field", "size", "_rows", "twist")

    def __init__(self, field, entries, twist=1):
        rows = [[field(c).value for c in row] for row in entries]
        if any(len(row) != len(rows) for row in rows):
            raise ValueError("TwistedMatrix needs a square grid")
        self.field = field
        self.size = len(rows)
        self._rows = tuple(tuple(row) for row in rows)
        self.twist = twist

    @classmethod
    def _from_values(cls, field, rows, twist):
        m = cls.__new__(cls)
        m.field = field
        m.size = len(rows)
        m._rows = tuple(tuple(row) for row in rows)
        m.twist = twist
        return m

    @classmethod
    def zero(cls, field, size, twist=1):
        return cls._from_values(field, [[0] * size for _ in range(size)], twist)

    @classmethod
    def identity(cls, field, size):
        return cls._from_values(
            field, [[1 if r == c else 0 for c in range(size)] for r in range(size)], 0
        )

    @property
    def values(self):
        return self._rows

    @property
    def entries(self):
        fld = self.field
        return tuple(tuple(FieldElement(fld, v) for v in row) for row in self._rows)

    def entry(self, row, col):
        return FieldElement(self.field, self._rows[row][col])

    def nonzero_entries(self):
        """(row, col, value) for every nonzero entry, row-major."""
        return [
            (r, c, FieldElement(self.field, v))
            for r, row in enumerate(self._rows)
            for c, v in enumerate(row)
            if v
        ]

    def is_zero(self):
        return not any(any(row) for row in self._rows)

    def sigma(self, e=1):
        """Raise every entry to the p^e power."""
        frob = self.field._frobenius
        rows = [[frob(v, e) for v in row] for row in self._rows]
        return TwistedMatrix._from_values(self.field, rows, self.twist)

    def submatrix(self, rows, cols):
        return [[self._rows[r][c] for c in cols] for r in rows]

    def apply(self, vector):
        """F(v) = M * sigma^twist(v), coordinatewise."""
        fld = self.field
        v = [fld._frobenius(fld(c).value, self.twist) for c in vector]
        out = []
        for row in self._rows:
            acc = 0
            for a, b in zip(row, v):
                if a and b:
                    acc = fld._add(acc, fld._mul(a, b))
            out.append(FieldElement(fld, acc))
        return out

    def to_json(self):
        return [[FieldElement(self.field, v).to_json() for v in row] for row in self._rows]

    def __eq__(self, other):
        if not isinstance(other, TwistedMatrix):
            return NotImplemented
        return self.field == other.field and self._rows == other._rows

    def __hash__(self):
        return hash((self.field.p, self.field.k, self._rows))

    def __repr__(self):
        return f"TwistedMatrix({self.field}, size={self.size}, twist={self.twist})"


def _matmul(field, a, b):
    n = len(a)
    if field.k == 1:
        p = field.p
        cols = list(zip(*b))
        return [[sum(x * y for x, y in zip(row, col)) % p for col in cols] for row in a]
    add, mul = field._add, field._mul
    out = [[0] * n for _ in range(n)]
    for i in range(n):
        row = a[i]
        for t, x in enumerate(row):
            if x:
                brow = b[t]
                orow = out[i]
                for j, y in enumerate(brow):
                    if y:
                        orow[j] = add(orow[j], mul(x, y))
    return out


def grid_rank(field, grid):
    """
    Rank of a (possibly rectangular) grid of encodings.

    Pivots on the first nonzero entry scanning rows top-down in each column.
    """
    rows = [list(r) for r in grid]
    if not rows or not rows[0]:
        return 0
    n_rows, n_cols = len(rows), len(rows[0])
    rank = 0
    for col in range(n_cols):
        pivot = next((r for r in range(rank, n_rows) if rows[r][col]), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        inv = field._inv(rows[rank][col])
        prow = rows[rank]
        for r in range(rank + 1, n_rows):
            v = rows[r][col]
            if v:
                factor = field._mul(v, inv)
                rows[r] = [field._sub(x, field._mul(factor, y)) for x, y in zip(rows[r], prow)]
        rank += 1
        if rank == n_rows:
            break
    return rank


def rank(M):
    return grid_rank(M.field, M.values)


def twisted_product(M, m):
    """
    Matrix of F^m: M * sigma^t(M) * sigma^2t(M) ... with t = M.twist.

    m = 0 gives the identity.
    """
    if m < 0:
        raise ValueError(f"iterate count must be nonnegative, got {m}")
    fld = M.field
    if m == 0:
        return TwistedMatrix.identity(fld, M.size)
    acc = [list(row) for row in M.values]
    for step in range(1, m):
        acc = _matmul(fld, acc, M.sigma(step * M.twist).values)
    return TwistedMatrix._from_values(fld, acc, m * M.twist)


@dataclass(frozen=True)
class SemilinearInvariants:
    rank: int
    a_number: int
    p_rank: int
    index: int
    nilpotent: bool
    superspecial: bool
    genus_zero: bool = False


def invariants(M):
    """Rank, a-number, p-rank (rank of F^g), index and the derived flags."""
    g = M.size
    if g == 0:
        return SemilinearInvariants(0, 0, 0, 0, True, True, genus_zero=True)

    fld = M.field
    r = rank(M)
    p_rank = rank(twisted_product(M, g))

    # index: first m with rank(F^m) == rank(F^(m+1)), F^0 = identity
    index = 0
    previous = g
    power = None
    for m in range(1, g + 2):
        step = M.sigma((m - 1) * M.twist).values
        power = [list(row) for row in step] if power is None else _matmul(fld, power, step)
        current = grid_rank(fld, power)
        if current == previous:
            break
        previous = current
        index = m
    if index > g:
        raise AssertionError(f"index {index} exceeds genus {g}")

    result = SemilinearInvariants(
        rank=r,
        a_number=g - r,
        p_rank=p_rank,
        index=index,
        nilpotent=p_rank == 0,
        superspecial=r == 0,
    )
    logger.debug("invariants of %r: %s", M, result)
    return result


def _block_lookup(blocks):
    return {b.i: b for b in blocks}


def _block_range(block):
    return range(block.offset, block.offset + block.dim)


def orbit_restricted_rank(M, blocks, orbit, m, representative=None):
    """
    Rank of F^m restricted to the block of one orbit representative.

    Columns are the block B_i of the representative (the smallest element
    unless one is given); rows are its image block B_{i p^m mod n}.
    """
    if m < 1:
        raise ValueError(f"iterate count must be positive, got {m}")
    n = len(blocks) + 1
    p = M.field.p
    members = set(orbit)
    if not members:
        raise OrbitError("empty orbit")
    start = min(members)
    generated = {start}
    s = start * p % n
    while s != start:
        generated.add(s)
        s = s * p % n
    if generated != members:
        raise OrbitError(f"{sorted(members)} is not an orbit of multiplication by {p} mod {n}")
    i = start if representative is None else representative
    if i not in members:
        raise OrbitError(f"representative {i} is not in the orbit {sorted(members)}")

    lookup = _block_lookup(blocks)
    source = lookup[i]
    target = lookup[i * pow(p, m, n) % n]
    if source.dim == 0 or target.dim == 0:
        return 0
    product = twisted_product(M, m)
    return grid_rank(M.field, product.submatrix(_block_range(target), _block_range(source)))


def block_ranks(M, blocks, n, p):
    """rk(F|B_i) for every i: columns of B_i against rows of B_{pi mod n}."""
    lookup = _block_lookup(blocks)
    ranks = {}
    for i in range(1, n):
        source = lookup[i]
        target = lookup[p * i % n]
        if source.dim == 0 or target.dim == 0:
            ranks[i] = 0
            continue
        ranks[i] = grid_rank(M.field, M.submatrix(_block_range(target), _block_range(source)))
    return ranks
