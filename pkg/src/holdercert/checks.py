"""Check results and certified comparison helpers.

A check passes only when the interval evaluation proves it: for a strict
inequality ``a < b`` the difference must be proved positive from endpoint
information alone.  An enclosure that merely straddles zero is reported
as undecided, never as a pass.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .interval import Interval, Verdict, cert_positive

PASSED = "passed"
FAILED = "failed"
UNDECIDED = "undecided"


@dataclass(frozen=True)
class CheckResult:
    """One verified inequality: identifier, claim anchor, verdict, margin.

    ``margin`` is a certified lower bound on how much room the inequality
    has (negative or straddling values accompany failed/undecided verdicts).
    """

    check_id: str
    anchor: str
    verdict: str
    margin: float

    @property
    def ok(self) -> bool:
        return self.verdict == PASSED


def _verdict_of(diff: Interval) -> str:
    v = cert_positive(diff)
    if v is Verdict.PROVED_POSITIVE:
        return PASSED
    if v is Verdict.PROVED_NONPOSITIVE:
        return FAILED
    return UNDECIDED


def certified_less(check_id: str, anchor: str, lhs: Interval, rhs: Interval) -> CheckResult:
    """Certify the strict inequality lhs < rhs; margin = proven gap."""
    diff = rhs - lhs
    return CheckResult(check_id, anchor, _verdict_of(diff), diff.lo)


def certified_chain(check_id: str, anchor: str, *terms: Interval) -> CheckResult:
    """Certify terms[0] < terms[1] < ... < terms[-1]; margin = weakest link."""
    verdict = PASSED
    margin = float("inf")
    for a, b in zip(terms, terms[1:]):
        diff = b - a
        v = _verdict_of(diff)
        if v == FAILED:
            verdict = FAILED
        elif v == UNDECIDED and verdict != FAILED:
            verdict = UNDECIDED
        margin = min(margin, diff.lo)
    return CheckResult(check_id, anchor, verdict, margin)


def certified_equal(
    check_id: str, anchor: str, lhs: Interval, rhs: Interval, tol: float = 1e-12
) -> CheckResult:
    """Certify |lhs - rhs| <= tol from the enclosure of the difference."""
    diff = lhs - rhs
    dev = max(abs(diff.lo), abs(diff.hi))
    verdict = PASSED if dev <= tol else FAILED
    return CheckResult(check_id, anchor, verdict, tol - dev)


def certified_below_decimal(check_id: str, anchor: str, lhs: Interval, threshold: str) -> CheckResult:
    """Certify lhs < threshold where threshold is an exact decimal literal.

    The comparison is done in exact rational arithmetic against the decimal
    value, so a threshold like 0.12 never suffers binary rounding.
    """
    t = Fraction(threshold)
    hi = Fraction(lhs.hi)
    verdict = PASSED if hi < t else (UNDECIDED if Fraction(lhs.lo) < t else FAILED)
    return CheckResult(check_id, anchor, verdict, float(t - hi))


def certified_above_decimal(check_id: str, anchor: str, lhs: Interval, threshold: str) -> CheckResult:
    t = Fraction(threshold)
    lo = Fraction(lhs.lo)
    verdict = PASSED if lo > t else (UNDECIDED if Fraction(lhs.hi) > t else FAILED)
    return CheckResult(check_id, anchor, verdict, float(lo - t))


def analytic_pass(check_id: str, anchor: str, margin: float = 0.0) -> CheckResult:
    """Record a step discharged by exact reasoning rather than arithmetic."""
    return CheckResult(check_id, anchor, PASSED, margin)


def merge_results(check_id: str, anchor: str, *results: CheckResult) -> CheckResult:
    """Combine sub-checks: worst verdict wins, margin is the weakest."""
    verdict = PASSED
    for r in results:
        if r.verdict == FAILED:
            verdict = FAILED
            break
        if r.verdict == UNDECIDED:
            verdict = UNDECIDED
    return CheckResult(check_id, anchor, verdict, min(r.margin for r in results))
