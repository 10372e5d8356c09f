"""Outward-rounded interval arithmetic over IEEE-754 binary64.

Every operation returns an interval that encloses the exact real image of
its operand intervals.  Outward rounding is realized by nextafter-style
endpoint nudging: the accumulated slack (a few ulps per operation) is far
below the smallest margin this package ever needs to certify (~1e-16 in
absolute terms, on quantities of size ~1e-5).

sin/cos use an exact argument reduction: the operand is reduced modulo
pi/2 in rational arithmetic against a 200-bit enclosure of pi, so the
reduction contributes no error floor.  The reduction budget is
|t| <= 1e6; larger arguments are rejected.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction


class IntervalError(Exception):
    """Base class for interval-kernel failures."""


class DomainError(IntervalError):
    """Operand outside the mathematical domain of the operation."""


class DivisionByZeroInterval(IntervalError):
    """Divisor interval contains zero."""


class ArgumentTooLarge(IntervalError):
    """Trig argument beyond the documented reduction budget."""


class Verdict(Enum):
    """Outcome of a sign certification drawn from interval endpoints."""

    PROVED_POSITIVE = "proved_positive"
    PROVED_NONPOSITIVE = "proved_nonpositive"
    UNDECIDED = "undecided"


# pi scaled by 2^200, correctly rounded; the binary64 endpoints of pi
# bracket the true value (math.pi rounds pi down).
_PI_SCALED = 5048344754617993871973410141242436836214643421490683230289920
_PI_FRAC = Fraction(_PI_SCALED, 2**200)
_HALF_PI_FRAC = _PI_FRAC / 2
_QUARTER_PI_FRAC = _PI_FRAC / 4

_HALF_PI_FLOAT = float(_HALF_PI_FRAC)
_KERNEL_CUT = 0.7853981633974483  # <= pi/4; below this no reduction is needed

ARGUMENT_BUDGET = 1.0e6

_INF = math.inf


def _down(x: float, steps: int = 1) -> float:
    for _ in range(steps):
        x = math.nextafter(x, -_INF)
    return x


def _up(x: float, steps: int = 1) -> float:
    for _ in range(steps):
        x = math.nextafter(x, _INF)
    return x


@dataclass(frozen=True)
class Interval:
    """Closed interval [lo, hi] of finite binary64 values."""

    lo: float
    hi: float

    def __post_init__(self) -> None:
        if not (math.isfinite(self.lo) and math.isfinite(self.hi)):
            raise ValueError(f"interval endpoints must be finite: [{self.lo}, {self.hi}]")
        if self.lo > self.hi:
            raise ValueError(f"inverted interval: [{self.lo}, {self.hi}]")

    @classmethod
    def point(cls, v: float) -> "Interval":
        v = float(v)
        return cls(v, v)

    # -- queries ----------------------------------------------------------

    @property
    def width(self) -> float:
        return self.hi - self.lo

    @property
    def mid(self) -> float:
        return 0.5 * (self.lo + self.hi)

    def encloses(self, x: float) -> bool:
        return self.lo <= x <= self.hi

    def subset_of(self, other: "Interval") -> bool:
        return other.lo <= self.lo and self.hi <= other.hi

    def intersects(self, other: "Interval") -> bool:
        return self.lo <= other.hi and other.lo <= self.hi

    def hull(self, other: "Interval") -> "Interval":
        return Interval(min(self.lo, other.lo), max(self.hi, other.hi))

    def __repr__(self) -> str:
        return f"Interval({self.lo!r}, {self.hi!r})"

    # -- arithmetic --------------------------------------------------------

    @staticmethod
    def _coerce(other) -> "Interval":
        if isinstance(other, Interval):
            return other
        if isinstance(other, (int, float)):
            return Interval.point(other)
        return NotImplemented

    def __add__(self, other) -> "Interval":
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return Interval(_down(self.lo + o.lo), _up(self.hi + o.hi))

    __radd__ = __add__

    def __sub__(self, other) -> "Interval":
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return Interval(_down(self.lo - o.hi), _up(self.hi - o.lo))

    def __rsub__(self, other) -> "Interval":
        return self._coerce(other).__sub__(self)

    def __neg__(self) -> "Interval":
        return Interval(-self.hi, -self.lo)

    def __mul__(self, other) -> "Interval":
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        p = (self.lo * o.lo, self.lo * o.hi, self.hi * o.lo, self.hi * o.hi)
        return Interval(_down(min(p)), _up(max(p)))

    __rmul__ = __mul__

    def __truediv__(self, other) -> "Interval":
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        if o.lo <= 0.0 <= o.hi:
            raise DivisionByZeroInterval(f"divisor {o!r} contains zero")
        p = (self.lo / o.lo, self.lo / o.hi, self.hi / o.lo, self.hi / o.hi)
        return Interval(_down(min(p)), _up(max(p)))

    def __rtruediv__(self, other) -> "Interval":
        return self._coerce(other).__truediv__(self)

    def __pow__(self, k: int) -> "Interval":
        if not isinstance(k, int) or k < 0:
            raise DomainError(f"interval power requires a non-negative int, got {k!r}")
        if k == 0:
            return Interval(1.0, 1.0)
        if k == 1:
            return self
        if k % 2 == 0 and self.lo < 0.0 < self.hi:
            m = max(-self.lo, self.hi)
            return Interval(0.0, _up(m**k, 2))
        lo, hi = self.lo**k, self.hi**k
        if lo > hi:  # even power of a negative interval
            lo, hi = hi, lo
        return Interval(_down(lo, 2), _up(hi, 2))

    def abs(self) -> "Interval":
        if self.lo >= 0.0:
            return self
        if self.hi <= 0.0:
            return Interval(-self.hi, -self.lo)
        return Interval(0.0, max(-self.lo, self.hi))


PI = Interval(math.pi, math.nextafter(math.pi, _INF))
HALF_PI = PI / 2
TWO_PI = PI * 2


def cert_positive(a: Interval) -> Verdict:
    """Certified sign of an interval: positive iff lo > 0, nonpositive iff hi <= 0."""
    if a.lo > 0.0:
        return Verdict.PROVED_POSITIVE
    if a.hi <= 0.0:
        return Verdict.PROVED_NONPOSITIVE
    return Verdict.UNDECIDED


# -- elementary functions ----------------------------------------------------


def sqrt(a: Interval) -> Interval:
    if a.lo < 0.0:
        raise DomainError(f"sqrt needs a nonnegative interval, got {a!r}")
    # IEEE sqrt is correctly rounded: one nudge per endpoint suffices
    return Interval(max(0.0, _down(math.sqrt(a.lo))), _up(math.sqrt(a.hi)))


def atan(a: Interval) -> Interval:
    return Interval(_down(math.atan(a.lo), 2), _up(math.atan(a.hi), 2))


def asin(a: Interval) -> Interval:
    if a.lo < -1.0 or a.hi > 1.0:
        raise DomainError(f"asin needs an interval within [-1, 1], got {a!r}")
    return Interval(_down(math.asin(a.lo), 2), _up(math.asin(a.hi), 2))


def _reduce(x: float) -> tuple[float, float, int]:
    """Reduce x to r = x - k*pi/2 with |r| <~ pi/4, exactly in rationals.

    Returns (r_hi, r_lo, k mod 4) where r_hi + r_lo represents r to ~2^-106.
    """
    k = math.floor(x / _HALF_PI_FLOAT + 0.5)
    r = Fraction(x) - k * _HALF_PI_FRAC
    while r > _QUARTER_PI_FRAC:
        r -= _HALF_PI_FRAC
        k += 1
    while r < -_QUARTER_PI_FRAC:
        r += _HALF_PI_FRAC
        k -= 1
    r_hi = float(r)
    r_lo = float(r - Fraction(r_hi))
    return r_hi, r_lo, k & 3


def _sin_point(x: float) -> tuple[float, float]:
    """Enclosure of sin(x) for a single float; pads cover libm + kernel error."""
    if abs(x) <= _KERNEL_CUT:
        v = math.sin(x)
        return _down(v, 2), _up(v, 2)
    rh, rl, q = _reduce(x)
    if q == 0:
        v = math.sin(rh) + rl * math.cos(rh)
    elif q == 1:
        v = math.cos(rh) - rl * math.sin(rh)
    elif q == 2:
        v = -(math.sin(rh) + rl * math.cos(rh))
    else:
        v = -(math.cos(rh) - rl * math.sin(rh))
    return _down(v, 2), _up(v, 2)


def _cos_point(x: float) -> tuple[float, float]:
    if abs(x) <= _KERNEL_CUT:
        v = math.cos(x)
        return _down(v, 2), _up(v, 2)
    rh, rl, q = _reduce(x)
    if q == 0:
        v = math.cos(rh) - rl * math.sin(rh)
    elif q == 1:
        v = -(math.sin(rh) + rl * math.cos(rh))
    elif q == 2:
        v = -(math.cos(rh) - rl * math.sin(rh))
    else:
        v = math.sin(rh) + rl * math.cos(rh)
    return _down(v, 2), _up(v, 2)


def _check_budget(a: Interval) -> None:
    if max(abs(a.lo), abs(a.hi)) > ARGUMENT_BUDGET:
        raise ArgumentTooLarge(f"trig argument {a!r} beyond reduction budget {ARGUMENT_BUDGET:g}")


def _has_extremum(a: Interval, offset_frac: Fraction) -> bool:
    """Does [a.lo, a.hi] contain a point offset + 2*pi*k?  Conservative."""
    two_pi = 2 * _PI_FRAC
    k_lo = math.floor((a.lo - float(offset_frac)) / float(two_pi)) - 1
    k_hi = math.ceil((a.hi - float(offset_frac)) / float(two_pi)) + 1
    flo, fhi = Fraction(a.lo), Fraction(a.hi)
    for k in range(k_lo, k_hi + 1):
        m = offset_frac + k * two_pi
        if flo <= m <= fhi:
            return True
    return False


def sin(a: Interval) -> Interval:
    """Enclosure of sin over an interval, split at interior extrema."""
    _check_budget(a)
    if a.width >= float(2 * _PI_FRAC) + 1e-9:
        return Interval(-1.0, 1.0)
    lo1, hi1 = _sin_point(a.lo)
    lo2, hi2 = (lo1, hi1) if a.hi == a.lo else _sin_point(a.hi)
    lo, hi = min(lo1, lo2), max(hi1, hi2)
    if _has_extremum(a, _HALF_PI_FRAC):
        hi = 1.0
    if _has_extremum(a, -_HALF_PI_FRAC):
        lo = -1.0
    return Interval(max(lo, -1.0), min(hi, 1.0))


def cos(a: Interval) -> Interval:
    _check_budget(a)
    if a.width >= float(2 * _PI_FRAC) + 1e-9:
        return Interval(-1.0, 1.0)
    lo1, hi1 = _cos_point(a.lo)
    lo2, hi2 = (lo1, hi1) if a.hi == a.lo else _cos_point(a.hi)
    lo, hi = min(lo1, lo2), max(hi1, hi2)
    if _has_extremum(a, Fraction(0)):
        hi = 1.0
    if _has_extremum(a, _PI_FRAC):
        lo = -1.0
    return Interval(max(lo, -1.0), min(hi, 1.0))
