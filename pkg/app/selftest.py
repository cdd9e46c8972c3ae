"""
Self-Test

Reruns the worked examples and the structural checks against frozen
values. Used by the selftest subcommand and by test_acceptance.py.
"""

from __future__ import annotations

import logging
from itertools import product

from pydantic import BaseModel

from .bounds import ekedahl_table
from .campaign import CampaignReport, genus4_char11_campaign
from .char2 import char2_sweep
from .report import build_char2_report, build_invariant_report
from .search import SearchSpec, enumerate_family

logger = logging.getLogger(__name__)


class Check(BaseModel):
    name: str
    passed: bool
    detail: str = ""


class SelftestReport(BaseModel):
    checks: list[Check]
    passed: int
    campaign: CampaignReport | None = None

    @property
    def ok(self):
        return self.passed == len(self.checks)


def _check(name, actual, expected):
    passed = actual == expected
    detail = "" if passed else f"expected {expected}, got {actual}"
    return Check(name=name, passed=passed, detail=detail)


def example_eleven_cover():
    """y^11 = x^2 (x+1) over F_13."""
    r = build_invariant_report(13, 1, 11, "x^2*(x+1)")
    entries = {
        (row, col): value
        for row, line in enumerate(r.matrix.entries)
        for col, value in enumerate(line)
        if value
    }
    return [
        _check("y^11 = x^2(x+1): m_i", r.m, [1, 1, 1, 2, 2, 1, 1, 2, 2, 2]),
        _check("y^11 = x^2(x+1): genus", r.genus, 5),
        _check("y^11 = x^2(x+1): matrix", entries, {(2, 0): 4, (4, 1): 5, (1, 2): 10, (3, 4): 3}),
        _check("y^11 = x^2(x+1): rank, a, p-rank", (r.rank, r.a_number, r.p_rank), (4, 1, 0)),
        _check("y^11 = x^2(x+1): a_lower, f_upper", (r.bounds.a_lower, r.bounds.f_upper), (1, 0)),
    ]


def example_sextic_cover():
    """y^6 = x^3 + x^2 + 1 over F_5."""
    r = build_invariant_report(5, 1, 6, "x^3+x^2+1")
    return [
        _check("y^6 = x^3+x^2+1: genus", r.genus, 4),
        _check("y^6 = x^3+x^2+1: orbits", r.orbits, [[1, 5], [2, 4], [3]]),
        _check("y^6 = x^3+x^2+1: rank, a, p-rank", (r.rank, r.a_number, r.p_rank), (1, 3, 1)),
        _check(
            "y^6 = x^3+x^2+1: bounds met",
            (r.bounds.a_lower, r.bounds.f_upper, r.bounds.rank_upper),
            (r.a_number, r.p_rank, r.rank),
        ),
    ]


def ekedahl_checks(sweeps=True):
    odd = [row for row in ekedahl_table() if row[2] % 2]
    failing = [row for row in odd if row[3] < 1]
    checks = [Check(
        name="block bound >= 1 for odd degree, g >= (p+1)/2",
        passed=not failing,
        detail=f"{failing}" if failing else "",
    )]
    if sweeps:
        cases = [(3, 7, 0), (5, 5, None)]
        for p, degree, expected in cases:
            census = enumerate_family(
                SearchSpec(p=p, degree=degree, filter="superspecial"), witness_cap=10_000
            )
            if expected is None:
                passed = census.matched >= 1 and "x^5+4*x" in census.witnesses
                checks.append(Check(
                    name=f"p={p} deg {degree}: superspecial witness",
                    passed=passed,
                    detail="" if passed else f"witnesses {census.witnesses}",
                ))
            else:
                checks.append(_check(f"p={p} deg {degree}: superspecial count", census.matched, expected))
    return checks


def genus_zero_check():
    r = build_invariant_report(7, 1, 3, "x")
    return [_check("y^3 = x over F_7: genus, matrix size", (r.genus, r.matrix.size), (0, 0))]


def char2_checks():
    r = build_char2_report(1, 2, "1", "x^5")
    checks = [_check("char2 g=2 Q=1: nilpotent, a", (r.nilpotent, r.a_number), (True, 1))]
    for k, g in product((1, 2), (1, 2, 3, 4)):
        # over F_4 only the nilpotent Q get a P search
        census = char2_sweep(k, g, exhaustive_pairs=None if k == 1 else False)
        checks.append(Check(
            name=f"char2 sweep F_{2 ** k} g={g}",
            passed=not census.violations,
            detail="; ".join(census.violations),
        ))
    return checks


def run_selftest(full=False):
    """
    Run every check. full also runs the exhaustive campaign sweep and
    the larger b_18 sample.
    """
    checks = example_eleven_cover() + example_sextic_cover() + genus_zero_check() + char2_checks()
    checks += ekedahl_checks(sweeps=True)
    campaign = genus4_char11_campaign(run_sweep=full, samples=1000 if full else 100)
    checks.append(Check(name="genus 4 char 11 campaign", passed=campaign.passed))
    for check in checks:
        logger.info("%s %s", "ok" if check.passed else "FAIL", check.name)
    return SelftestReport(checks=checks, passed=sum(c.passed for c in checks), campaign=campaign)
