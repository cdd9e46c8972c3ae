"""
Curve Census Search

Deterministic enumeration of Kummer and characteristic-2 hyperelliptic
families over a small finite field. Every candidate is validated, the
valid ones get their full invariants, and the results are aggregated into
a census keyed by (genus, a-number, p-rank) plus a capped witness list.

Sweeps can be split into contiguous index ranges and run in worker
processes; chunk results are merged in range order, so the output does not
depend on the worker count.
"""

from __future__ import annotations

import csv
import io
import logging
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from itertools import islice, product
from pathlib import Path
from typing import Literal

from pydantic import BaseModel, Field, model_validator

from .char2 import frobenius_matrix_from_q, validate_char2
from .config import get_settings
from .errors import CurveValidationError, SearchSpaceTooLarge
from .finite_field import make_field
from .kummer import hasse_witt_matrix, ramification_profile, validate_kummer
from .parser import poly_text
from .polynomial import Polynomial, gcd
from .semilinear import invariants

logger = logging.getLogger(__name__)

CSV_HEADER = ("genus", "a_number", "p_rank", "count")


class SearchSpec(BaseModel):
    """
    A family of curves over F_{p^k}.

    kummer: y^n = f with deg f = degree; only the exponents in `free`
    vary (all below the degree by default), the rest are zero.
    char2: y^2 + Qy = P of genus g over F_{2^k}.
    """

    p: int
    k: int = 1
    family: Literal["kummer", "char2"] = "kummer"
    n: int = 2
    degree: int | None = None
    g: int | None = None
    free: list[int] | None = None
    monic: bool = True
    squarefree: bool | None = None
    filter: Literal["all", "superspecial", "a_number", "p_rank"] = "all"
    filter_value: int | None = None
    limit: int | None = Field(default=None, ge=1)

    @model_validator(mode="after")
    def _check_family(self):
        if self.family == "kummer" and self.degree is None:
            raise ValueError("kummer family needs a degree")
        if self.family == "char2" and (self.g is None or self.p != 2):
            raise ValueError("char2 family needs p = 2 and a genus g")
        if self.filter in ("a_number", "p_rank") and self.filter_value is None:
            raise ValueError(f"filter {self.filter} needs a filter_value")
        if self.free is not None and self.degree is not None:
            bad = [e for e in self.free if not 0 <= e < self.degree]
            if bad:
                raise ValueError(f"free exponents {bad} outside [0, {self.degree})")
        return self

    @property
    def require_squarefree(self):
        """Hyperelliptic sweeps default to square-free f."""
        if self.squarefree is None:
            return self.family == "kummer" and self.n == 2
        return self.squarefree

    def free_exponents(self):
        if self.free is not None:
            return sorted(set(self.free))
        return list(range(self.degree))

    def axes(self):
        """Value ranges for each enumerated coordinate, in tuple order."""
        q = self.p ** self.k
        if self.family == "char2":
            return [range(q)] * (self.g + 1) + [range(q)] * (2 * self.g + 1) + [range(1, q)]
        leading = [range(1, 2)] if self.monic else [range(1, q)]
        return [range(q)] * len(self.free_exponents()) + leading

    def cardinality(self):
        total = 1
        for axis in self.axes():
            total *= len(axis)
        return total


class CensusRow(BaseModel):
    genus: int
    a_number: int
    p_rank: int
    count: int


class GenusVariability(BaseModel):
    genus: int
    a_numbers: list[int]
    p_ranks: list[int]
    a_number_varies: bool
    p_rank_varies: bool


class CensusTable(BaseModel):
    spec: SearchSpec
    enumerated: int
    valid: int
    matched: int
    rows: list[CensusRow]
    witnesses: list[str]
    variability: list[GenusVariability]

    def counts(self):
        return {(r.genus, r.a_number, r.p_rank): r.count for r in self.rows}


class _Chunk(BaseModel):
    enumerated: int = 0
    valid: int = 0
    matched: int = 0
    counts: dict[str, int] = {}
    witnesses: list[str] = []


def _matches(spec, inv):
    if spec.filter == "superspecial":
        return inv.superspecial and not inv.genus_zero
    if spec.filter == "a_number":
        return inv.a_number == spec.filter_value
    if spec.filter == "p_rank":
        return inv.p_rank == spec.filter_value
    return True


def _kummer_candidate(spec, field, values):
    coeffs = [0] * (spec.degree + 1)
    for e, v in zip(spec.free_exponents(), values[:-1]):
        coeffs[e] = v
    coeffs[spec.degree] = values[-1]
    f = Polynomial._from_values(field, coeffs)
    if spec.require_squarefree and gcd(f, f.derivative()).degree > 0:
        return None, None
    try:
        curve = validate_kummer(field, spec.n, f)
    except CurveValidationError:
        return None, None
    profile = ramification_profile(curve)
    matrix, _ = hasse_witt_matrix(curve, profile)
    return invariants(matrix), poly_text(f)


def _char2_candidate(spec, field, values):
    g = spec.g
    Q = Polynomial._from_values(field, values[: g + 1])
    P = Polynomial._from_values(field, values[g + 1:])
    try:
        curve = validate_char2(field, g, Q, P)
    except CurveValidationError:
        return None, None
    return invariants(frobenius_matrix_from_q(field, g, curve.Q)), f"{poly_text(Q)} ; {poly_text(P)}"


def _run_chunk(spec, start, stop, witness_cap):
    field = make_field(spec.p, spec.k)
    candidate = _char2_candidate if spec.family == "char2" else _kummer_candidate
    chunk = _Chunk()
    counts = Counter()
    for values in islice(product(*spec.axes()), start, stop):
        chunk.enumerated += 1
        inv, text = candidate(spec, field, values)
        if inv is None:
            continue
        chunk.valid += 1
        counts[f"{inv.rank + inv.a_number},{inv.a_number},{inv.p_rank}"] += 1
        if _matches(spec, inv):
            chunk.matched += 1
            if len(chunk.witnesses) < witness_cap:
                chunk.witnesses.append(text)
    chunk.counts = dict(counts)
    return chunk


def _chunks(total, workers):
    size = -(-total // (workers * 4)) if total else 1
    return [(start, min(start + size, total)) for start in range(0, total, size)]


def enumerate_family(spec, workers=None, witness_cap=None):
    """
    Run the census for a SearchSpec.

    Raises:
        SearchSpaceTooLarge: more candidates than spec.limit or the settings allow
    """
    settings = get_settings()
    limit = spec.limit or settings.search_limit
    total = spec.cardinality()
    if total > limit:
        raise SearchSpaceTooLarge(total, limit)
    workers = settings.worker_count(workers)
    witness_cap = settings.witness_cap if witness_cap is None else witness_cap

    logger.info("census over %d candidates with %d worker(s)", total, workers)
    if workers <= 1 or total < 1000:
        chunks = [_run_chunk(spec, 0, total, witness_cap)]
    else:
        ranges = _chunks(total, workers)
        with ProcessPoolExecutor(max_workers=workers) as executor:
            futures = [executor.submit(_run_chunk, spec, a, b, witness_cap) for a, b in ranges]
            chunks = [future.result() for future in futures]

    counts = Counter()
    witnesses = []
    enumerated = valid = matched = 0
    for chunk in chunks:
        enumerated += chunk.enumerated
        valid += chunk.valid
        matched += chunk.matched
        counts.update(chunk.counts)
        witnesses.extend(chunk.witnesses)
    witnesses = witnesses[:witness_cap]

    rows = []
    for key in sorted(counts, key=lambda s: tuple(int(x) for x in s.split(","))):
        genus, a_number, p_rank = (int(x) for x in key.split(","))
        rows.append(CensusRow(genus=genus, a_number=a_number, p_rank=p_rank, count=counts[key]))
    if sum(r.count for r in rows) != valid:
        raise AssertionError("census counts do not add up to the valid curves")

    census = CensusTable(
        spec=spec,
        enumerated=enumerated,
        valid=valid,
        matched=matched,
        rows=rows,
        witnesses=witnesses,
        variability=_variability(rows),
    )
    logger.info("census done: %d valid, %d matched", valid, matched)
    return census


def _variability(rows):
    by_genus = {}
    for row in rows:
        a_set, p_set = by_genus.setdefault(row.genus, (set(), set()))
        a_set.add(row.a_number)
        p_set.add(row.p_rank)
    return [
        GenusVariability(
            genus=genus,
            a_numbers=sorted(a_set),
            p_ranks=sorted(p_set),
            a_number_varies=len(a_set) > 1,
            p_rank_varies=len(p_set) > 1,
        )
        for genus, (a_set, p_set) in sorted(by_genus.items())
    ]


def census_csv(census):
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    for row in census.rows:
        writer.writerow((row.genus, row.a_number, row.p_rank, row.count))
    return buffer.getvalue()


def write_census(census, path):
    Path(path).write_text(census_csv(census), encoding="utf-8")


def write_witnesses(census, path):
    Path(path).write_text("".join(w + "\n" for w in census.witnesses), encoding="utf-8")
