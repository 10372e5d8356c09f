"""The function f(x) = x sin(1/x), its Holder quotient, and the structural
checks that reduce the global quotient bound to per-interval searches.

J_0 = [1/alpha_1, inf) and J_n = [1/alpha_{n+1}, 1/alpha_n) partition
(0, 1/alpha_1]; f is monotone on each piece and its endpoint images
(-1)^n sin(theta_n) shrink in magnitude, which nests the images
f(J_0) > f(J_1) > ... and makes cross-interval pairs remappable into a
single piece without increasing their distance.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import interval as iv
from .checks import (
    CheckResult,
    FAILED,
    PASSED,
    UNDECIDED,
    analytic_pass,
    certified_less,
    merge_results,
)
from .interval import PI, DomainError, Interval, Verdict, cert_positive
from .quadrature import composite_simpson
from .roots import N_MAX, find_alpha, theta_interval, alpha_interval

X_FLOOR = 1e-6  # interval forms need 1/x within the trig reduction budget


class RemapFailure(Exception):
    """A cross-interval pair could not be remapped; indicates a defect
    in the root certificates rather than a property of f."""


# -- f and derivatives ---------------------------------------------------------


def f(x: float) -> float:
    """x sin(1/x) for x > 0."""
    if x <= 0.0:
        raise DomainError(f"f requires x > 0, got {x!r}")
    return x * math.sin(1.0 / x)


def df(x: float) -> float:
    """f'(x) = sin(1/x) - (1/x) cos(1/x)."""
    if x <= 0.0:
        raise DomainError(f"df requires x > 0, got {x!r}")
    t = 1.0 / x
    return math.sin(t) - t * math.cos(t)


def ddf(x: float) -> float:
    """f''(x) = -sin(1/x)/x^3."""
    if x <= 0.0:
        raise DomainError(f"ddf requires x > 0, got {x!r}")
    return -math.sin(1.0 / x) / x**3


def _recip(x: Interval) -> Interval:
    if x.lo <= 0.0:
        raise DomainError(f"interval form requires x > 0, got {x!r}")
    if x.lo < X_FLOOR:
        raise iv.ArgumentTooLarge(
            f"1/x beyond trig reduction budget for {x!r} (floor {X_FLOOR:g})"
        )
    return 1 / x


def f_iv(x: Interval) -> Interval:
    return x * iv.sin(_recip(x))


def df_iv(x: Interval) -> Interval:
    t = _recip(x)
    return iv.sin(t) - t * iv.cos(t)


def ddf_iv(x: Interval) -> Interval:
    t = _recip(x)
    return -(iv.sin(t) * t**3)


# -- quotient records ----------------------------------------------------------


@dataclass(frozen=True)
class QuotientRecord:
    """A candidate maximizer of |f(x)-f(y)| / |y-x|^alpha_exp."""

    x: float
    y: float
    alpha_exp: float
    q: float
    interval_index: int
    provenance: str


def classify_index(x: float) -> int:
    """Index n of the piece J_n containing x (0 for [1/alpha_1, inf))."""
    if x <= 0.0:
        raise DomainError(f"classify_index requires x > 0, got {x!r}")
    if x >= 1.0 / find_alpha(1).alpha:
        return 0
    t = 1.0 / x
    if t > (N_MAX + 1) * math.pi:
        raise DomainError(f"x={x!r} below the certified range (n > {N_MAX})")
    n = max(1, min(int((t - math.pi / 2) / math.pi), N_MAX - 1))
    while n + 1 <= N_MAX and t > find_alpha(n + 1).alpha:
        n += 1
    while n > 1 and t <= find_alpha(n).alpha:
        n -= 1
    if n + 1 > N_MAX or t > find_alpha(n + 1).alpha:
        raise DomainError(f"x={x!r} below the certified range (n > {N_MAX})")
    return n


def quotient(x: float, y: float, alpha_exp: float = 0.5, provenance: str = "grid") -> QuotientRecord:
    """Two-point quotient |f(x)-f(y)| / |y-x|^alpha_exp, with piece index."""
    if x <= 0.0 or y <= 0.0:
        raise DomainError("quotient requires x, y > 0")
    if x == y:
        raise DomainError("quotient requires x != y")
    if not 0.0 < alpha_exp <= 0.5:
        raise DomainError(f"alpha_exp must lie in (0, 1/2], got {alpha_exp!r}")
    if x > y:
        x, y = y, x
    q = abs(f(x) - f(y)) / (y - x) ** alpha_exp

    def index_of(v: float) -> int | None:
        try:
            return classify_index(v)
        except DomainError:
            return None  # below the certified piece range; treated as straddling

    ix, iy = index_of(x), index_of(y)
    return QuotientRecord(
        x=x,
        y=y,
        alpha_exp=alpha_exp,
        q=q,
        interval_index=ix if (ix is not None and ix == iy) else -1,
        provenance=provenance,
    )


# -- Wirtinger (numerical oracle check) ---------------------------------------


def wirtinger_for_interval(n: int, quad_tol: float = 1e-12) -> CheckResult:
    """int g^2 <= ((b-a)/pi)^2 int (g')^2 for g = f' on [1/alpha_{n+1}, 1/alpha_n].

    Quadrature-based numerical check (g vanishes at both ends since the
    interval ends are stationary points of f).
    """
    a = 1.0 / find_alpha(n + 1).alpha
    b = 1.0 / find_alpha(n).alpha

    def g_sq(t):
        u = 1.0 / t
        return (np.sin(u) - u * np.cos(u)) ** 2

    def dg_sq(t):
        return (np.sin(1.0 / t) / t**3) ** 2

    lhs = composite_simpson(g_sq, a, b, rel_tol=quad_tol)
    rhs = ((b - a) / math.pi) ** 2 * composite_simpson(dg_sq, a, b, rel_tol=quad_tol)
    verdict = PASSED if lhs < rhs else FAILED
    return CheckResult(
        f"L1.6/J[n={n}]",
        f"Lemma 1.6 (Wirtinger) for g = f' on J_n [n={n}]",
        verdict,
        rhs - lhs,
    )


def wirtinger_equality_case(tol: float = 1e-9, a: float = 0.0, b: float = 1.0) -> CheckResult:
    """Equality case g(t) = sin(pi (t-a)/(b-a)): both sides must agree to tol."""
    w = b - a

    def g_sq(t):
        return np.sin(math.pi * (t - a) / w) ** 2

    def dg_sq(t):
        return (math.pi / w * np.cos(math.pi * (t - a) / w)) ** 2

    lhs = composite_simpson(g_sq, a, b, rel_tol=1e-12)
    rhs = (w / math.pi) ** 2 * composite_simpson(dg_sq, a, b, rel_tol=1e-12)
    ratio = lhs / rhs
    verdict = PASSED if abs(ratio - 1.0) <= tol else FAILED
    return CheckResult(
        "L1.6/equality",
        f"Lemma 1.6 equality case, g = sine arch on [{a:g}, {b:g}]: ratio = 1 +/- {tol:g}",
        verdict,
        tol - abs(ratio - 1.0),
    )


# -- concave envelope: f(x) <= sqrt(2 (x - 1/pi)) on [1/pi, x_max) -------------

_STRIP = 1e-3  # mean-value strip at the left edge, discharged analytically


def _envelope_boxes(lo: float, hi: float, samples: int) -> list[Interval]:
    edges = np.linspace(lo, hi, samples + 1)
    return [Interval(float(a), float(b)) for a, b in zip(edges[:-1], edges[1:])]


def check_envelope(x_max: float = 8.0, samples: int = 10_000) -> list[CheckResult]:
    """Certify f(x) <= sqrt(2 (x - 1/pi)) on [1/pi, x_max], three regimes,
    plus concavity of f there (f'' <= 0, i.e. sin(1/x) >= 0).

    The left strip [1/pi, 1/pi + 1e-3] is the mean-value regime:
    f(1/pi) = 0 exactly, f' <= f'(1/pi) = pi by concavity, so
    f(x) <= pi eps <= sqrt(2 eps) as long as pi^2 eps <= 2; the strip is
    far inside that.  Every box to the right is certified directly:
    the envelope is increasing, so max f over the box is compared with
    the envelope at the box's left edge.
    """
    if x_max <= 1.0 / math.pi + 2.0 * _STRIP:
        raise DomainError(f"x_max too small: {x_max!r}")
    inv_pi = 1 / PI
    strip_scalar = certified_less(
        "P2.3/strip-scalar",
        "Prop 2.3, (2.10) left strip: pi^2 * strip_width < 2 (mean-value regime)",
        PI**2 * Interval.point(_STRIP),
        Interval.point(2.0),
    )
    strip = merge_results(
        "P2.3/strip",
        "Prop 2.3, (2.10) on [1/pi, 1/pi + 1e-3]: f(1/pi) = 0, f' <= pi by concavity, "
        "pi eps <= sqrt(2 eps)",
        strip_scalar,
        analytic_pass("P2.3/strip-identity", "f(1/pi) = sin(pi)/pi = 0 exactly"),
    )

    # regime edges (floats; regime membership only routes reporting)
    e1 = 1.0 / math.pi + 2.0 / math.pi**2
    e2 = 1.0 / math.pi + 0.5
    regime_margin = [math.inf, math.inf, math.inf]
    regime_verdict = [PASSED, PASSED, PASSED]

    budget = 16 * samples
    stack = _envelope_boxes(inv_pi.hi + _STRIP, x_max, samples)
    processed = 0
    while stack:
        box = stack.pop()
        processed += 1
        rhs = iv.sqrt((Interval.point(box.lo) - inv_pi) * 2)
        diff = rhs - f_iv(box)
        regime = 0 if box.lo < e1 else (1 if box.lo < e2 else 2)
        if diff.lo > 0.0:
            regime_margin[regime] = min(regime_margin[regime], diff.lo)
            continue
        if processed < budget and box.width > 1e-14:
            m = box.mid
            stack.append(Interval(box.lo, m))
            stack.append(Interval(m, box.hi))
            continue
        regime_verdict[regime] = UNDECIDED
        regime_margin[regime] = min(regime_margin[regime], diff.lo)

    results = [
        merge_results(
            "P2.3/regime1",
            "Prop 2.3, (2.10) on [1/pi, 1/pi + 2/pi^2] (mean-value regime + boxes)",
            strip,
            CheckResult("P2.3/regime1-boxes", "boxes", regime_verdict[0], regime_margin[0]),
        ),
        CheckResult(
            "P2.3/regime2",
            "Prop 2.3, (2.10) on (1/pi + 2/pi^2, 1/pi + 1/2]: f(x) < x < sqrt(2(x-1/pi))",
            regime_verdict[1],
            regime_margin[1],
        ),
        CheckResult(
            "P2.3/regime3",
            f"Prop 2.3, (2.10) on (1/pi + 1/2, {x_max:g}]: f(x) < 1 < sqrt(2(x-1/pi))",
            regime_verdict[2],
            regime_margin[2],
        ),
    ]

    # concavity: sin(1/x) >= 0 on [1/pi, x_max]; certified strictly inside,
    # the sub-ulp edge [1/pi, (1/pi).hi] holds since x >= 1/pi <=> 1/x <= pi
    conc_verdict = PASSED
    conc_margin = math.inf
    stack = _envelope_boxes(inv_pi.hi, x_max, max(64, samples // 10))
    processed = 0
    while stack:
        box = stack.pop()
        processed += 1
        s = iv.sin(1 / box)
        if s.lo > 0.0:
            conc_margin = min(conc_margin, s.lo)
            continue
        if processed < budget and box.width > 1e-14:
            m = box.mid
            stack.append(Interval(box.lo, m))
            stack.append(Interval(m, box.hi))
            continue
        conc_verdict = UNDECIDED
        conc_margin = min(conc_margin, s.lo)
    results.append(
        CheckResult(
            "P2.3/concavity",
            f"Prop 2.3: f'' <= 0 on [1/pi, {x_max:g}] (sin(1/x) >= 0; boundary analytic)",
            conc_verdict,
            conc_margin,
        )
    )
    return results


# -- image nesting -------------------------------------------------------------


def check_nesting(n_count: int) -> list[CheckResult]:
    """Certify sin theta_{n+1} < sin theta_n and the alternating endpoint
    signs f(1/alpha_n) = (-1)^n sin theta_n; this is the checkable core of
    the image nesting f(J_0) > f(J_1) > ...
    """
    results: list[CheckResult] = []

    def sign_check(n: int) -> CheckResult:
        img = f_iv(1 / alpha_interval(n))
        signed = img if n % 2 == 0 else -img
        verdict = PASSED if cert_positive(signed) is Verdict.PROVED_POSITIVE else UNDECIDED
        return CheckResult(
            f"T2.4/sign[n={n}]",
            f"Thm 2.4 proof: f(1/alpha_n) has sign (-1)^n [n={n}]",
            verdict,
            signed.lo,
        )

    for n in range(1, n_count):
        contraction = certified_less(
            f"T2.4/contract[n={n}]",
            f"Thm 2.4 proof, (2.16): sin theta_{{n+1}} < sin theta_n [n={n}]",
            iv.sin(theta_interval(n + 1)),
            iv.sin(theta_interval(n)),
        )
        results.append(
            merge_results(
                f"T2.4/nesting[n={n}]",
                f"Thm 2.4, (2.16): image of J_{{n}} contains image of J_{{n+1}} [n={n}]",
                contraction,
                sign_check(n),
            )
        )
    results.append(sign_check(n_count))
    return results


# -- monotone remap ------------------------------------------------------------

_IMAGE_PAD = 1e-11  # stay clear of image-range endpoints when choosing m


def _image_range(m: int) -> tuple[float, float]:
    """Image of f over J_m (closure), from the certified angle estimates."""
    if m == 0:
        return -math.sin(find_alpha(1).theta), 1.0
    lo_img = f(1.0 / find_alpha(m + 1).alpha)
    hi_img = f(1.0 / find_alpha(m).alpha)
    if lo_img > hi_img:
        lo_img, hi_img = hi_img, lo_img
    return lo_img, hi_img


def _piece_bounds(m: int, cap: float) -> tuple[float, float]:
    if m == 0:
        return 1.0 / find_alpha(1).alpha, max(cap, 1.0)
    return 1.0 / find_alpha(m + 1).alpha, 1.0 / find_alpha(m).alpha


def _preimage(m: int, target: float, cap: float) -> float:
    """Bisect the monotone restriction of f to J_m for f(t) = target."""
    a, b = _piece_bounds(m, cap)
    fa, fb = f(a), f(b)
    increasing = fb >= fa
    lo_v, hi_v = (fa, fb) if increasing else (fb, fa)
    if not (lo_v - 1e-9 <= target <= hi_v + 1e-9):
        raise RemapFailure(
            f"target {target!r} outside image of J_{m} [{lo_v!r}, {hi_v!r}]"
        )
    for _ in range(200):
        mid = 0.5 * (a + b)
        if mid <= a or mid >= b:
            break
        if (f(mid) < target) == increasing:
            a = mid
        else:
            b = mid
    return 0.5 * (a + b)


def remap(x: float, y: float) -> tuple[float, float]:
    """Map a cross-interval pair to an equal-image pair in one piece.

    Candidate pieces are the innermost admissible J_m (largest m between
    the pieces of y and x whose image safely contains both f-values) and
    the piece of y itself; each point is replaced by its preimage under
    the monotone restriction of f, and the shorter of the two candidate
    pairs wins.  In every boundary configuration at least one candidate
    is non-expanding, so the distance never increases and the pair's
    quotient can only grow.
    """
    if not 0.0 < x < y:
        raise DomainError(f"remap requires 0 < x < y, got ({x!r}, {y!r})")
    k = classify_index(y)
    l = classify_index(x)
    if k == l:
        return x, y
    fx, fy = f(x), f(y)
    m_best = k
    for cand in range(l, k, -1):
        lo_img, hi_img = _image_range(cand)
        if (
            lo_img + _IMAGE_PAD <= fx <= hi_img - _IMAGE_PAD
            and lo_img + _IMAGE_PAD <= fy <= hi_img - _IMAGE_PAD
        ):
            m_best = cand
            break

    def mapped(m: int) -> tuple[float, float]:
        x2 = x if m == l else _preimage(m, fx, cap=y)
        y2 = y if m == k else _preimage(m, fy, cap=y)
        return (x2, y2) if x2 <= y2 else (y2, x2)

    x2, y2 = mapped(m_best)
    if m_best != k:
        alt = mapped(k)
        if alt[1] - alt[0] < y2 - x2:
            x2, y2 = alt
    if y2 - x2 > (y - x) * (1.0 + 1e-9) + 1e-15:
        raise RemapFailure(
            f"remapped distance grew: ({x!r}, {y!r}) -> ({x2!r}, {y2!r})"
        )
    return x2, y2
