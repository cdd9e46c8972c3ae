"""
Reports

Pydantic models for everything the CLI prints, the pipeline functions that
fill them, and jinja2 rendering of the text form. JSON key order is the
field declaration order, so identical inputs give identical bytes.
"""

from __future__ import annotations

import logging
from functools import lru_cache
from pathlib import Path

from jinja2 import Environment, FileSystemLoader, StrictUndefined
from pydantic import BaseModel

from .bounds import BoundsReport, a_number_upper_bound, orbits
from .char2 import char2_matrix, validate_char2
from .finite_field import make_field
from .kummer import (
    basis_labels,
    genus_bounds,
    hasse_witt_matrix,
    ramification_profile,
    validate_kummer,
)
from .oracles import elliptic_prank_of_cubic, rh_genus, stabilized_prank
from .parser import parse_poly, poly_text
from .semilinear import block_ranks, invariants

logger = logging.getLogger(__name__)

TEMPLATE_DIR = Path(__file__).resolve().parent / "templates"


class CurveInput(BaseModel):
    p: int
    k: int
    n: int
    f: str


class BlockEntry(BaseModel):
    i: int
    dim: int
    offset: int
    target: int
    rank: int


class MatrixSection(BaseModel):
    size: int
    blocks: list[BlockEntry]
    labels: list[str]
    entries: list[list]


class OracleSection(BaseModel):
    rh_genus: int | None
    genus_agrees: bool | None
    stabilized_p_rank: int
    stabilized_index: int
    p_rank_agrees: bool
    elliptic_p_rank: int | None = None


class InvariantReport(BaseModel):
    input: CurveInput
    m: list[int]
    genus: int
    orbits: list[list[int]]
    matrix: MatrixSection
    rank: int
    a_number: int
    p_rank: int
    index: int
    superspecial: bool
    bounds: BoundsReport
    oracles: OracleSection


class GenusBoundsSection(BaseModel):
    lower: int
    upper: int


class BoundsOutput(BaseModel):
    input: CurveInput
    m: list[int]
    genus: int
    genus_bounds: GenusBoundsSection
    orbits: list[list[int]]
    group_order: int
    bounds: BoundsReport


class Char2Input(BaseModel):
    k: int
    g: int
    Q: str
    P: str


class Char2Report(BaseModel):
    input: Char2Input
    genus: int
    matrix: list[list]
    rank: int
    a_number: int
    p_rank: int
    index: int
    nilpotent: bool
    superspecial: bool
    q_constant: bool
    expected_a_number: int | None
    oracles: OracleSection


def load_curve(p, k, n, f_text):
    field = make_field(p, k)
    return validate_kummer(field, n, parse_poly(f_text, field))


def _oracles(curve, genus, inv, matrix):
    stable, steps = stabilized_prank(matrix)
    elliptic = None
    if curve is not None and curve.n == 2 and genus == 1 and curve.field.k == 1 and curve.p >= 5 and curve.degree == 3:
        elliptic = elliptic_prank_of_cubic(curve.f)
    rh = rh_genus(curve) if curve is not None else None
    section = OracleSection(
        rh_genus=rh,
        genus_agrees=None if rh is None else rh == genus,
        stabilized_p_rank=stable,
        stabilized_index=steps,
        p_rank_agrees=(stable, steps) == (inv.p_rank, inv.index),
        elliptic_p_rank=elliptic,
    )
    if section.genus_agrees is False or not section.p_rank_agrees:
        raise AssertionError(f"oracle disagreement: {section}")
    if elliptic is not None and elliptic != inv.p_rank:
        raise AssertionError(f"point count p-rank {elliptic} != matrix p-rank {inv.p_rank}")
    return section


def analyze_curve(curve, f_text=None):
    """Full invariant report for a validated curve."""
    profile = ramification_profile(curve)
    matrix, blocks = hasse_witt_matrix(curve, profile)
    inv = invariants(matrix)
    n, p = curve.n, curve.p
    ranks = block_ranks(matrix, blocks, n, p)
    section = MatrixSection(
        size=matrix.size,
        blocks=[
            BlockEntry(i=b.i, dim=b.dim, offset=b.offset, target=p * b.i % n, rank=ranks[b.i])
            for b in blocks
            if b.dim
        ],
        labels=basis_labels(curve, profile),
        entries=matrix.to_json(),
    )
    if sum(ranks.values()) != inv.rank:
        raise AssertionError("block ranks do not add up to the rank of F")

    report = InvariantReport(
        input=CurveInput(p=p, k=curve.field.k, n=n, f=f_text or poly_text(curve.original)),
        m=list(profile.m),
        genus=profile.genus,
        orbits=orbits(n, p).orbits,
        matrix=section,
        rank=inv.rank,
        a_number=inv.a_number,
        p_rank=inv.p_rank,
        index=inv.index,
        superspecial=inv.superspecial,
        bounds=a_number_upper_bound(curve, profile),
        oracles=_oracles(curve, profile.genus, inv, matrix),
    )
    b = report.bounds
    if not (b.a_lower <= report.a_number <= b.a_upper and report.p_rank <= b.f_upper):
        raise AssertionError(f"invariants outside their bounds: {report.model_dump()}")
    logger.info("y^%d = %s: genus %d, a %d, p-rank %d", n, report.input.f, report.genus, report.a_number, report.p_rank)
    return report


def build_invariant_report(p, k, n, f_text):
    return analyze_curve(load_curve(p, k, n, f_text), f_text)


def report_from_echo(echo):
    """Rerun the pipeline from the input section of a report."""
    echo = CurveInput.model_validate(echo)
    return build_invariant_report(echo.p, echo.k, echo.n, echo.f)


def build_bounds_output(p, k, n, f_text):
    curve = load_curve(p, k, n, f_text)
    profile = ramification_profile(curve)
    decomposition = orbits(n, p)
    gb = genus_bounds(curve)
    return BoundsOutput(
        input=CurveInput(p=p, k=k, n=n, f=f_text),
        m=list(profile.m),
        genus=profile.genus,
        genus_bounds=GenusBoundsSection(lower=gb.lower, upper=gb.upper),
        orbits=decomposition.orbits,
        group_order=decomposition.order,
        bounds=a_number_upper_bound(curve, profile),
    )


def build_char2_report(k, g, q_text, p_text):
    field = make_field(2, k)
    curve = validate_char2(field, g, parse_poly(q_text, field), parse_poly(p_text, field))
    matrix = char2_matrix(curve)
    inv = invariants(matrix)
    q_constant = curve.Q.is_constant()
    return Char2Report(
        input=Char2Input(k=k, g=g, Q=q_text, P=p_text),
        genus=g,
        matrix=matrix.to_json(),
        rank=inv.rank,
        a_number=inv.a_number,
        p_rank=inv.p_rank,
        index=inv.index,
        nilpotent=inv.nilpotent,
        superspecial=inv.superspecial,
        q_constant=q_constant,
        expected_a_number=(g + 1) // 2 if q_constant else None,
        oracles=_oracles(None, g, inv, matrix),
    )


def to_json(model):
    return model.model_dump_json(indent=2)


@lru_cache(maxsize=1)
def environment():
    return Environment(
        loader=FileSystemLoader(TEMPLATE_DIR),
        undefined=StrictUndefined,
        trim_blocks=True,
        lstrip_blocks=True,
        keep_trailing_newline=True,
    )


def render_text(template_name, **context):
    return environment().get_template(template_name).render(**context)
