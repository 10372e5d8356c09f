"""Verification campaign assembly and deterministic serialization.

The JSON rendering is canonical: fixed key order, floats via Python repr
(shortest round-trip form), no timing or environment data, so identical
flags produce byte-identical reports.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from . import __version__
from .checklist import check_proposition_inequalities
from .checks import CheckResult, FAILED, PASSED, UNDECIDED
from .constants import ConstantsRow, c_n, check_constants_suite, tail_constant_certificate
from .holder import (
    check_envelope,
    check_nesting,
    wirtinger_equality_case,
    wirtinger_for_interval,
)
from .optimizer import SupremumReport
from .roots import (
    check_cubic_overshoot,
    check_theta_gap,
    check_theta_lower_bounds,
    check_theta_upper_bounds,
)

ENVELOPE_X_MAX = 8.0
ENVELOPE_SAMPLES = 10_000
WIRTINGER_N = 50


@dataclass(frozen=True)
class VerificationReport:
    tool_version: str
    config: dict
    checks: list[CheckResult]
    constants_table: list[ConstantsRow]
    supremum: SupremumReport | None

    @property
    def summary(self) -> dict[str, int]:
        counts = {PASSED: 0, FAILED: 0, UNDECIDED: 0}
        for c in self.checks:
            counts[c.verdict] += 1
        return {"passed": counts[PASSED], "failed": counts[FAILED], "undecided": counts[UNDECIDED]}

    @property
    def ok(self) -> bool:
        return self.summary["failed"] == 0

    @property
    def strict_ok(self) -> bool:
        s = self.summary
        return s["failed"] == 0 and s["undecided"] == 0


def run_verification(n_max: int = 200, with_constants_table: bool = True) -> VerificationReport:
    """Run the full inequality campaign up to index n_max."""
    checks: list[CheckResult] = []
    for n in range(1, n_max + 1):
        checks.extend(check_theta_upper_bounds(n))
        checks.append(check_theta_lower_bounds(n))
        checks.append(check_theta_gap(n))
    checks.extend(check_cubic_overshoot())
    checks.extend(check_constants_suite(n_max))
    checks.extend(tail_constant_certificate())
    checks.append(wirtinger_equality_case())
    for n in range(1, min(n_max, WIRTINGER_N) + 1):
        checks.append(wirtinger_for_interval(n))
    checks.extend(check_envelope(ENVELOPE_X_MAX, ENVELOPE_SAMPLES))
    checks.extend(check_nesting(n_max))
    checks.extend(check_proposition_inequalities())
    table = [c_n(n) for n in range(1, n_max + 1)] if with_constants_table else []
    return VerificationReport(
        tool_version=__version__,
        config={
            "n_max": n_max,
            "envelope_x_max": ENVELOPE_X_MAX,
            "envelope_samples": ENVELOPE_SAMPLES,
            "wirtinger_n": min(n_max, WIRTINGER_N),
        },
        checks=checks,
        constants_table=table,
        supremum=None,
    )


# -- serialization -------------------------------------------------------------


def _check_dict(c: CheckResult) -> dict:
    return {"id": c.check_id, "anchor": c.anchor, "verdict": c.verdict, "margin": c.margin}


def _row_dict(r: ConstantsRow) -> dict:
    return {
        "n": r.n,
        "alpha_n": r.alpha_n,
        "alpha_np1": r.alpha_np1,
        "delta": r.delta,
        "i_closed": r.i_closed,
        "i_quad": r.i_quad,
        "g": r.g,
        "f_factor": r.f_factor,
        "c": r.c,
    }


def supremum_dict(s: SupremumReport) -> dict:
    def rec(q) -> dict:
        return {
            "x": q.x,
            "y": q.y,
            "alpha_exp": q.alpha_exp,
            "q": q.q,
            "interval_index": q.interval_index,
            "provenance": q.provenance,
        }

    return {
        "alpha_exp": s.alpha_exp,
        "sup_estimate": s.sup_estimate,
        "arg": rec(s.arg),
        "per_interval": [{"n": n, "sup": v, "arg": rec(a)} for n, v, a in s.per_interval],
        "method_breakdown": s.method_breakdown,
        "bound_certificate": s.bound_certificate,
        "tail_checks": [_check_dict(c) for c in s.tail_checks],
    }


def report_to_dict(r: VerificationReport) -> dict:
    return {
        "tool_version": r.tool_version,
        "config": r.config,
        "checks": [_check_dict(c) for c in r.checks],
        "constants_table": [_row_dict(row) for row in r.constants_table],
        "supremum": None if r.supremum is None else supremum_dict(r.supremum),
        "summary": r.summary,
    }


def report_to_json(r: VerificationReport) -> str:
    return json.dumps(report_to_dict(r), indent=2) + "\n"


def report_to_markdown(r: VerificationReport) -> str:
    lines = [
        "# holdercert verification report",
        "",
        f"tool version: {r.tool_version}",
        "",
        "## Configuration",
        "",
    ]
    for k, v in r.config.items():
        lines.append(f"- {k}: {v!r}")
    s = r.summary
    lines += [
        "",
        "## Summary",
        "",
        f"- passed: {s['passed']}",
        f"- failed: {s['failed']}",
        f"- undecided: {s['undecided']}",
        "",
        "## Checks",
        "",
        "| id | verdict | margin | anchor |",
        "|---|---|---|---|",
    ]
    for c in r.checks:
        lines.append(f"| {c.check_id} | {c.verdict} | {c.margin!r} | {c.anchor} |")
    if r.constants_table:
        lines += [
            "",
            "## Constants",
            "",
            "| n | alpha_n | alpha_n+1 | delta | I_n closed | I_n quad | G_n | F_n | C_n |",
            "|---|---|---|---|---|---|---|---|---|",
        ]
        for row in r.constants_table:
            lines.append(
                f"| {row.n} | {row.alpha_n!r} | {row.alpha_np1!r} | {row.delta!r} "
                f"| {row.i_closed!r} | {row.i_quad!r} | {row.g!r} | {row.f_factor!r} | {row.c!r} |"
            )
    if r.supremum is not None:
        d = supremum_dict(r.supremum)
        lines += ["", "## Supremum", "", "```json", json.dumps(d, indent=2), "```"]
    return "\n".join(lines) + "\n"
