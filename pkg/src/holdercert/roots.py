"""Certified roots of phi(t) = sin t - t cos t and the angle estimates.

For each n >= 1 the equation phi(t) = 0 has exactly one solution alpha_n
in (n pi, n pi + pi/2); writing alpha_n = n pi + pi/2 - theta_n gives an
angle theta_n in (0, pi/2) with alpha_n * tan(theta_n) = 1.  The points
1/alpha_n are the stationary points of x*sin(1/x), so everything
downstream hangs off these certificates.

Certification is by interval bisection on a sign-changing bracket; the
parity of n fixes which end is negative ((-1)^n * phi increases through
the root).  No monotonicity of phi itself is assumed, only the certified
sign change.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from . import interval as iv
from .checks import (
    CheckResult,
    analytic_pass,
    certified_chain,
    certified_less,
    merge_results,
)
from .interval import HALF_PI, PI, Interval, Verdict, cert_positive
from .interval import _HALF_PI_FRAC  # exact pi/2 for high-precision angle recovery

N_MAX = 10_000
BRACKET_WIDTH_TARGET = 1e-12
SUBDIVISION_BUDGET = 1_000_000


class CertificationFailure(Exception):
    """A sign change could not be certified; signals a kernel defect."""


class SubdivisionBudgetExceeded(Exception):
    """Adaptive subdivision exceeded its box budget."""


def phi(t: float) -> float:
    """Point evaluation of sin t - t cos t."""
    return math.sin(t) - t * math.cos(t)


def dphi(t: float) -> float:
    """Derivative of phi: t sin t."""
    return t * math.sin(t)


def phi_iv(t: Interval) -> Interval:
    """Interval enclosure of phi."""
    return iv.sin(t) - t * iv.cos(t)


@dataclass(frozen=True)
class RootCertificate:
    """Certified bracket for alpha_n plus point estimate and angle data."""

    n: int
    bracket: Interval
    alpha: float
    theta: float
    residual: float


def _decide_side(m: float, sgn: float) -> Verdict:
    """Certified sign of sgn*phi at the point m."""
    return cert_positive(phi_iv(Interval.point(m)) * sgn)


@lru_cache(maxsize=None)
def find_alpha(n: int) -> RootCertificate:
    """Certify the unique root of phi in (n pi, n pi + pi/2).

    Deterministic: bisection on certified signs until the bracket is at
    most 1e-12 wide (or two ulps of alpha_n, whichever is larger), then a
    Newton polish for the point estimate.  theta is recovered from the
    exact rational pi/2 so the tangent residual stays tiny for all n.
    """
    if not (1 <= n <= N_MAX):
        raise ValueError(f"n must be in [1, {N_MAX}], got {n}")
    sgn = 1.0 if n % 2 == 0 else -1.0  # sgn * phi = (-1)^n * phi

    a = (Interval.point(n) * PI).hi
    b = ((Interval.point(2 * n + 1) * PI) / 2).lo
    if cert_positive(-(phi_iv(Interval.point(a)) * sgn)) is not Verdict.PROVED_POSITIVE:
        raise CertificationFailure(f"left bracket end not certified for n={n}")
    if _decide_side(b, sgn) is not Verdict.PROVED_POSITIVE:
        raise CertificationFailure(f"right bracket end not certified for n={n}")

    for _ in range(200):
        w = b - a
        if w <= BRACKET_WIDTH_TARGET:
            break
        moved = False
        for cand in (a + 0.5 * w, a + 0.25 * w, a + 0.75 * w):
            if not (a < cand < b):
                continue
            verdict = _decide_side(cand, sgn)
            if verdict is Verdict.PROVED_POSITIVE:
                b = cand
                moved = True
                break
            if cert_positive(-(phi_iv(Interval.point(cand)) * sgn)) is Verdict.PROVED_POSITIVE:
                a = cand
                moved = True
                break
        if not moved:
            if b <= math.nextafter(a, math.inf):
                break  # bracket is a single ulp; cannot shrink further
            raise CertificationFailure(f"bisection stalled for n={n} at [{a!r}, {b!r}]")

    x = 0.5 * (a + b)
    for _ in range(4):
        d = dphi(x)
        if d == 0.0:
            break
        x_next = x - phi(x) / d
        if not (a - 1e-9 <= x_next <= b + 1e-9) or x_next == x:
            break
        x = x_next

    def scored(c: float) -> tuple[float, float, float]:
        th = float((2 * n + 1) * _HALF_PI_FRAC - Fraction(c))
        return abs(c * math.tan(th) - 1.0), c, th

    residual, alpha, theta = min(
        scored(c) for c in (x, math.nextafter(x, -math.inf), math.nextafter(x, math.inf))
    )
    return RootCertificate(n=n, bracket=Interval(a, b), alpha=alpha, theta=theta, residual=residual)


def alpha_interval(n: int) -> Interval:
    return find_alpha(n).bracket


def theta_interval(n: int) -> Interval:
    """Certified enclosure of theta_n = (2n+1) pi/2 - alpha_n."""
    return (Interval.point(2 * n + 1) * PI) / 2 - find_alpha(n).bracket


# -- certified angle estimates ------------------------------------------------


def check_theta_upper_bounds(n: int) -> list[CheckResult]:
    """The three upper estimates for theta_n.

    (1.1): theta_n < 1/alpha_n < 1/(n pi)
    (1.2): theta_n < (1 + theta_n^2) / (n pi + pi/2)
    (1.3): theta_n < A - sqrt(A^2 - 1), A = (2n+1) pi / 4
    """
    th = theta_interval(n)
    bracket = alpha_interval(n)
    inv_alpha = 1 / bracket
    inv_npi = 1 / (Interval.point(n) * PI)
    r1 = certified_chain(
        f"L1.1/eq1.1[n={n}]",
        f"Lemma 1.1, (1.1): theta_n < 1/alpha_n < 1/(n pi) [n={n}]",
        th,
        inv_alpha,
        inv_npi,
    )
    c = (Interval.point(2 * n + 1) * PI) / 2
    r2 = certified_less(
        f"L1.1/eq1.2[n={n}]",
        f"Lemma 1.1, (1.2): theta_n < (1+theta_n^2)/(n pi + pi/2) [n={n}]",
        th,
        (1 + th**2) / c,
    )
    big_a = (Interval.point(2 * n + 1) * PI) / 4
    r3 = certified_less(
        f"L1.1/eq1.3[n={n}]",
        f"Lemma 1.1, (1.3): theta_n < A - sqrt(A^2-1), A=(2n+1)pi/4 [n={n}]",
        th,
        big_a - iv.sqrt(big_a**2 - 1),
    )
    return [r1, r2, r3]


def check_theta_lower_bounds(n: int) -> CheckResult:
    """Lemma 1.2: theta_n > sin theta_n > 1/(n pi + pi/2), and the sharper
    (1.4-5): theta_n > arcsin(1/(n pi + pi/2))."""
    th = theta_interval(n)
    c = (Interval.point(2 * n + 1) * PI) / 2
    inv_c = 1 / c
    chain = certified_chain(
        f"L1.2/chain[n={n}]",
        f"Lemma 1.2: 1/(n pi + pi/2) < sin theta_n < theta_n [n={n}]",
        inv_c,
        iv.sin(th),
        th,
    )
    eta = iv.asin(inv_c)
    sharper = certified_less(
        f"L1.2/eq1.4-5[n={n}]",
        f"Lemma 1.2, (1.4-5): arcsin(1/(n pi + pi/2)) < theta_n [n={n}]",
        eta,
        th,
    )
    return merge_results(
        f"L1.2[n={n}]",
        f"Lemma 1.2 incl. (1.4-5): theta_n > sin theta_n > 1/(n pi + pi/2) [n={n}]",
        chain,
        sharper,
    )


def check_theta_gap(n: int) -> CheckResult:
    """Lemma 1.3, (1.5): 0 < theta_n - theta_{n+1} < pi/(alpha_n alpha_{n+1}).

    The gap is evaluated through the arctangent subtraction identity
    theta_n - theta_{n+1} = atan(delta_n / (1 + alpha_n alpha_{n+1})),
    which is exact for the true roots (tan theta_k = 1/alpha_k) and keeps
    the enclosure width ~delta-bracket/alpha^2.  Subtracting the two theta
    enclosures directly would be hopeless: the true margin of the upper
    bound decays like pi^3/(3 (alpha_n alpha_{n+1})^3).
    """
    bn = alpha_interval(n)
    bn1 = alpha_interval(n + 1)
    product = bn * bn1
    gap = iv.atan((bn1 - bn) / (1 + product))
    positive = CheckResult(
        f"L1.3/lower[n={n}]",
        f"Lemma 1.3, (1.5): 0 < theta_n - theta_{{n+1}} [n={n}]",
        "passed" if cert_positive(gap) is Verdict.PROVED_POSITIVE else "undecided",
        gap.lo,
    )
    upper = certified_less(
        f"L1.3/upper[n={n}]",
        f"Lemma 1.3, (1.5): theta_n - theta_{{n+1}} < pi/(alpha_n alpha_{{n+1}}) [n={n}]",
        gap,
        PI / product,
    )
    return merge_results(
        f"L1.3[n={n}]",
        f"Lemma 1.3, (1.5): 0 < theta_n - theta_{{n+1}} < pi/(alpha_n alpha_{{n+1}}) [n={n}]",
        positive,
        upper,
    )


# -- Lemma 1.5: sin t - t cos t < t^3/3 on (0, pi/2) -------------------------

_SERIES_CUT = 0.4
_LEFT_TAIL = 2.0**-30


def _overshoot_iv(t: Interval) -> Interval:
    """Enclosure of p(t) = sin t - t cos t - t^3/3.

    For t <= 0.4 the alternating series p = -t^5/30 + t^7/840 - t^9/45360...
    is used with an explicit remainder band; this kills the catastrophic
    cancellation that makes the direct form useless near zero.
    """
    if t.hi <= _SERIES_CUT:
        tail_hi = iv._up((t.hi**9) / 45360.0, 2)
        return -(t**5) / 30 + (t**7) / 840 + Interval(-tail_hi, 0.0)
    return iv.sin(t) - t * iv.cos(t) - (t**3) / 3


def check_cubic_overshoot() -> list[CheckResult]:
    """Lemma 1.5: sin t - t cos t < t^3/3 on (0, pi/2).

    (0, 2^-30] is discharged by the alternating series (the t^5 term
    dominates), recorded as an analytic-tail check; [2^-30, pi/2] by
    adaptive interval subdivision with a box budget.
    """
    tail = analytic_pass(
        "L1.5/tail",
        "Lemma 1.5: series bound sin t - t cos t - t^3/3 <= -t^5/30 + t^7/840 < 0 on (0, 2^-30]",
    )
    stack = [Interval(_LEFT_TAIL, HALF_PI.hi)]
    boxes = 0
    worst = math.inf
    while stack:
        box = stack.pop()
        boxes += 1
        if boxes > SUBDIVISION_BUDGET:
            raise SubdivisionBudgetExceeded(f"lemma 1.5 subdivision exceeded {SUBDIVISION_BUDGET} boxes")
        p = _overshoot_iv(box)
        if p.hi < 0.0:
            worst = min(worst, -p.hi)
            continue
        m = box.mid
        if m <= box.lo or m >= box.hi:
            raise CertificationFailure(f"lemma 1.5 box {box!r} undecidable at float resolution")
        stack.append(Interval(box.lo, m))
        stack.append(Interval(m, box.hi))
    main = CheckResult(
        "L1.5/main",
        "Lemma 1.5: sin t - t cos t < t^3/3 on [2^-30, pi/2], certified by subdivision",
        "passed",
        worst,
    )
    return [tail, main]
