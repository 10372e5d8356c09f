"""Interval kernel: enclosure, monotonicity, width control, error surface."""

import math
import random

import mpmath as mp
import pytest
from hypothesis import given, settings, strategies as st

import holdercert.interval as iv
from holdercert.interval import (
    PI,
    ArgumentTooLarge,
    DivisionByZeroInterval,
    DomainError,
    Interval,
    Verdict,
    cert_positive,
)

mp.mp.prec = 120


def mp_encloses(a: Interval, value) -> bool:
    return mp.mpf(a.lo) <= value <= mp.mpf(a.hi)


class TestConstruction:
    def test_point(self):
        a = Interval.point(1.5)
        assert a.lo == a.hi == 1.5

    @pytest.mark.parametrize("lo,hi", [(math.nan, 1.0), (0.0, math.inf), (-math.inf, 0.0)])
    def test_rejects_nonfinite(self, lo, hi):
        with pytest.raises(ValueError):
            Interval(lo, hi)

    def test_rejects_inverted(self):
        with pytest.raises(ValueError):
            Interval(2.0, 1.0)


class TestArithmetic:
    def test_add_encloses(self):
        a = Interval(1, 2) + Interval(3, 4)
        assert a.lo <= 4.0 and a.hi >= 6.0

    def test_mul_encloses(self):
        a = Interval(-1, 2) * Interval(3, 4)
        assert a.lo <= -4.0 and a.hi >= 8.0

    def test_div_by_zero_interval(self):
        with pytest.raises(DivisionByZeroInterval):
            Interval(1, 1) / Interval(0, 1)

    def test_scalar_mixing(self):
        a = 2 * Interval(1, 2) + 1.0
        assert a.lo <= 3.0 and a.hi >= 5.0

    def test_even_power_clips_at_zero(self):
        a = Interval(-1, 2) ** 2
        assert a.lo == 0.0 and a.hi >= 4.0
        b = Interval(-3, -2) ** 2
        assert b.lo <= 4.0 and b.hi >= 9.0 and b.lo > 0

    def test_neg_abs(self):
        a = -Interval(1, 2)
        assert a == Interval(-2, -1)
        assert Interval(-3, 1).abs() == Interval(0, 3)


class TestElementary:
    def test_sqrt_squares(self):
        a = iv.sqrt(Interval(4, 9))
        assert a.lo <= 2.0 and a.hi >= 3.0

    def test_sqrt_domain(self):
        with pytest.raises(DomainError):
            iv.sqrt(Interval(-1, 1))

    def test_asin_domain(self):
        with pytest.raises(DomainError):
            iv.asin(Interval(0, 1.5))

    def test_sin_quarter_wave(self):
        # [0, pi/2 rounded up]: monotone rise plus the inserted maximum
        a = iv.sin(Interval(0.0, math.nextafter(math.pi / 2, math.inf)))
        assert a.hi == 1.0
        assert -1e-300 <= a.lo <= 0.0

    def test_cos_half_wave(self):
        a = iv.cos(Interval(0.0, math.nextafter(math.pi, math.inf)))
        assert a.lo == -1.0 and a.hi == 1.0

    def test_full_period_shortcut(self):
        a = iv.sin(Interval(0.0, 10.0))
        assert a == Interval(-1.0, 1.0)

    def test_budget(self):
        with pytest.raises(ArgumentTooLarge):
            iv.sin(Interval(0.0, 2e6))


class TestCertification:
    def test_positive(self):
        assert cert_positive(Interval(0.1, 0.2)) is Verdict.PROVED_POSITIVE

    def test_nonpositive(self):
        assert cert_positive(Interval(-1.0, -0.5)) is Verdict.PROVED_NONPOSITIVE
        assert cert_positive(Interval(-1.0, 0.0)) is Verdict.PROVED_NONPOSITIVE

    def test_undecided(self):
        assert cert_positive(Interval(-0.1, 0.1)) is Verdict.UNDECIDED


class TestEnclosureProperty:
    """Exact point evaluation (mpmath, 120-bit) lies inside every result."""

    N = 100_000

    def test_random_points(self):
        rng = random.Random(987123)
        count = self.N
        for i in range(count // 5):
            x = rng.uniform(-1e6, 1e6) if i % 3 == 0 else rng.uniform(-20, 20)
            a = Interval.point(x)
            assert mp_encloses(iv.sin(a), mp.sin(mp.mpf(x)))
            assert mp_encloses(iv.cos(a), mp.cos(mp.mpf(x)))
            assert mp_encloses(iv.atan(a), mp.atan(mp.mpf(x)))
            y = rng.uniform(-1.0, 1.0)
            assert mp_encloses(iv.asin(Interval.point(y)), mp.asin(mp.mpf(y)))
            z = rng.uniform(0.0, 1e6)
            assert mp_encloses(iv.sqrt(Interval.point(z)), mp.sqrt(mp.mpf(z)))

    def test_arithmetic_chain(self):
        rng = random.Random(555)
        for _ in range(2000):
            x, y = rng.uniform(-100, 100), rng.uniform(1e-3, 100)
            a, b = Interval.point(x), Interval.point(y)
            exact = (mp.mpf(x) + mp.mpf(y)) * (mp.mpf(x) - mp.mpf(y)) / mp.mpf(y)
            assert mp_encloses((a + b) * (a - b) / b, exact)


@settings(max_examples=300, derandomize=True)
@given(st.floats(min_value=-1e6, max_value=1e6, allow_nan=False))
def test_sin_enclosure_hypothesis(x):
    assert mp_encloses(iv.sin(Interval.point(x)), mp.sin(mp.mpf(x)))


@settings(max_examples=300, derandomize=True)
@given(st.floats(min_value=-1e6, max_value=1e6, allow_nan=False))
def test_cos_enclosure_hypothesis(x):
    assert mp_encloses(iv.cos(Interval.point(x)), mp.cos(mp.mpf(x)))


@settings(max_examples=200, derandomize=True)
@given(
    st.floats(min_value=-50, max_value=50, allow_nan=False),
    st.floats(min_value=0, max_value=1, allow_nan=False),
    st.floats(min_value=0, max_value=1, allow_nan=False),
    st.floats(min_value=-50, max_value=50, allow_nan=False),
    st.floats(min_value=0, max_value=1, allow_nan=False),
    st.floats(min_value=0, max_value=1, allow_nan=False),
)
def test_inclusion_monotonicity(a_mid, a_w, a_grow, b_mid, b_w, b_grow):
    """a within a', b within b'  =>  op(a, b) within op(a', b')."""
    inner_a = Interval(a_mid - a_w, a_mid + a_w)
    outer_a = Interval(a_mid - a_w - a_grow, a_mid + a_w + a_grow)
    inner_b = Interval(b_mid - b_w, b_mid + b_w)
    outer_b = Interval(b_mid - b_w - b_grow, b_mid + b_w + b_grow)
    assert (inner_a + inner_b).subset_of(outer_a + outer_b)
    assert (inner_a - inner_b).subset_of(outer_a - outer_b)
    assert (inner_a * inner_b).subset_of(outer_a * outer_b)
    assert iv.sin(inner_a).subset_of(iv.sin(outer_a))
    assert iv.cos(inner_b).subset_of(iv.cos(outer_b))


class TestWidthControl:
    """Point-interval inputs: one operation widens by at most 4 ulps."""

    def _ulp_width_ok(self, result: Interval) -> bool:
        scale = max(abs(result.mid), 5e-324)
        return result.width <= 4.0 * math.ulp(scale)

    def test_elementary_width(self):
        rng = random.Random(31337)
        for _ in range(5000):
            x = rng.uniform(-1e5, 1e5)
            assert self._ulp_width_ok(iv.sin(Interval.point(x)))
            assert self._ulp_width_ok(iv.cos(Interval.point(x)))
            assert self._ulp_width_ok(iv.atan(Interval.point(x)))
            assert self._ulp_width_ok(iv.sqrt(Interval.point(abs(x))))

    def test_arithmetic_width(self):
        rng = random.Random(424242)
        for _ in range(5000):
            a = Interval.point(rng.uniform(-100, 100))
            b = Interval.point(rng.uniform(0.5, 100))
            assert self._ulp_width_ok(a + b)
            assert self._ulp_width_ok(a - b)
            assert self._ulp_width_ok(a * b)
            assert self._ulp_width_ok(a / b)


def test_pi_enclosure():
    assert mp_encloses(PI, mp.pi)
    assert PI.width <= 2 * math.ulp(math.pi)
