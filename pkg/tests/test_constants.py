"""Constants rows, the closed-form/quadrature cross-check, and the certified
constants suite.  Frozen values are from 60-digit mpmath evaluation."""

import math

import numpy as np
import pytest

from holdercert.checks import PASSED
from holdercert.constants import (
    c_n,
    check_constants_suite,
    i_n_closed,
    i_n_quad,
    tail_constant_certificate,
    tail_sqrt_c_bound,
)
from holdercert.quadrature import QuadratureBudgetExceeded, composite_simpson
from holdercert.roots import find_alpha

I_ORACLE = {1: 2569.108500733336, 2: 12664.695493401992, 5: 199381.51595128776}
C_ORACLE = {1: 2.2563463338991654, 2: 1.8274008610234556, 3: 1.7075267875581779}


class TestQuadrature:
    def test_sin_squared_identity(self):
        # integral of sin^2 over [0, pi] is pi/2
        val = composite_simpson(lambda u: np.sin(u) ** 2, 0.0, math.pi, rel_tol=1e-12)
        assert val == pytest.approx(math.pi / 2, rel=1e-12)

    def test_budget(self):
        with pytest.raises(QuadratureBudgetExceeded):
            composite_simpson(lambda u: np.abs(np.sin(1.0 / (u + 1e-8))), 0.0, 1.0, rel_tol=1e-13, max_panels=64)

    def test_tol_validation(self):
        with pytest.raises(ValueError):
            composite_simpson(lambda u: u, 0.0, 1.0, rel_tol=1e-2)


class TestOscillationIntegral:
    @pytest.mark.parametrize("n", sorted(I_ORACLE))
    def test_closed_matches_oracle(self, n):
        assert i_n_closed(n) == pytest.approx(I_ORACLE[n], rel=1e-12)

    @pytest.mark.parametrize("n", [1, 2, 5, 10, 25, 50])
    def test_closed_matches_quadrature(self, n):
        closed = i_n_closed(n)
        quad = i_n_quad(n, tol=1e-12)
        assert abs(closed - quad) / quad <= 1e-10

    def test_quintic_lower_bound(self):
        # the bracketed factor is positive, so I_n exceeds the quintic part
        for n in (1, 2, 9):
            a, b = find_alpha(n).alpha, find_alpha(n + 1).alpha
            assert i_n_closed(n) > (b**5 - a**5) / 10.0

    def test_quintic_ratio(self):
        a, b = find_alpha(1).alpha, find_alpha(2).alpha
        ratio = i_n_quad(1) / ((b**5 - a**5) / 10.0)
        assert 1.0 < ratio < 1.1


class TestConstantsRows:
    @pytest.mark.parametrize("n", sorted(C_ORACLE))
    def test_c_oracle(self, n):
        assert c_n(n).c == pytest.approx(C_ORACLE[n], rel=1e-12)

    @pytest.mark.parametrize("n", [1, 2, 10, 50, 200])
    def test_row_invariants(self, n):
        row = c_n(n)
        assert math.pi - 0.2 < row.delta < math.pi + 0.2
        assert abs(row.i_closed - row.i_quad) / row.i_quad <= 1e-10
        correction = row.delta**2 / (math.pi**2 * row.alpha_n**2 * row.alpha_np1**2) * (
            row.delta * row.f_factor / 4.0
        )
        assert row.c == pytest.approx(row.g + correction, rel=1e-14)

    def test_delta_tends_to_pi(self):
        for n in (10, 60, 150):
            assert abs(c_n(n).delta - math.pi) < 1e-2

    @pytest.mark.parametrize("n", [1, 2, 10, 50, 200])
    def test_quintic_identity(self, n):
        # alpha'^5 - alpha^5 = 5 a^2 b^2 d + 5 a b d^3 + d^5
        a, b = find_alpha(n).alpha, find_alpha(n + 1).alpha
        d = b - a
        lhs = b**5 - a**5
        rhs = 5 * a**2 * b**2 * d + 5 * a * b * d**3 + d**5
        assert lhs == pytest.approx(rhs, rel=1e-12)

    @pytest.mark.parametrize("n", [1, 2, 10, 50, 200])
    def test_dual_route_identity(self, n):
        # Lemma-style assembly equals the Wirtinger-chain constant
        row = c_n(n)
        chain = (1.0 / math.pi**2) * (1.0 / row.alpha_n - 1.0 / row.alpha_np1) ** 2 * row.i_closed
        assert row.c == pytest.approx(chain, rel=1e-12)

    def test_large_n_trend(self):
        # rows 50..200 sit below 1.7 (they approach pi/2)
        for n in (50, 100, 150, 200):
            assert c_n(n).c < 1.7
        assert c_n(200).c == pytest.approx(math.pi / 2, abs=2e-4)


class TestCertifiedSuite:
    def test_suite_passes(self):
        results = check_constants_suite(10)
        assert all(r.verdict == PASSED for r in results)
        ids = {r.check_id for r in results}
        assert {"L1.4/a1a2", "L1.4/a2a3", "L1.4/C1", "L1.4/C2", "L1.4/G1"} <= ids

    def test_known_margins(self):
        results = {r.check_id: r for r in check_constants_suite(3)}
        # product margins: 34.7127... - 34.6 and 84.2371... - 84.22
        assert results["L1.4/a1a2"].margin == pytest.approx(0.11272, rel=1e-3)
        assert results["L1.4/a2a3"].margin == pytest.approx(0.01709, rel=1e-3)
        # the tight ones
        assert 0 < results["L1.4/ratio[n=2]"].margin < 1e-4
        assert 0 < results["L1.4/corr[n=2]"].margin < 1e-5

    def test_tail_certificate(self):
        results = tail_constant_certificate()
        assert all(r.verdict == PASSED for r in results)
        assert tail_sqrt_c_bound() == pytest.approx(math.sqrt(1.83012), rel=1e-12)
        assert tail_sqrt_c_bound() < math.sqrt(2.0)
