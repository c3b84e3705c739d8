import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cube_sobolev.special import (
    LOG2,
    TWO_LOG2,
    Tolerance,
    alpha,
    c_alpha,
    c_explicit,
    entropy_H,
    h_of,
    h_prime,
    h_second,
    inv_entropy,
    phi,
    psi,
    tau,
    xi,
)

# frozen 40-digit mpmath evaluations of the defining formulas
H_02 = 0.5004024235381878795331879388931051306048
PSI_07 = 1.100395608725988806423751067604871069959
H_03 = 0.1746911955173339700207416876245167099873
HP_03 = 1.129785391385070666365183635923855760366
HPP_03 = 3.308748019217614516425432786699510797957


class TestEntropy:
    def test_endpoints(self):
        assert entropy_H(0.0) == 0.0
        assert entropy_H(1.0) == 0.0
        assert entropy_H(0.5) == pytest.approx(LOG2, abs=1e-15)

    def test_against_high_precision(self):
        assert entropy_H(0.2) == pytest.approx(H_02, abs=1e-15)

    def test_domain(self):
        with pytest.raises(ValueError):
            entropy_H(-0.01)
        with pytest.raises(ValueError):
            entropy_H(1.01)

    def test_inverse_endpoints(self):
        assert inv_entropy(0.0) == 0.0
        assert inv_entropy(LOG2) == 0.5

    def test_inverse_roundtrip(self):
        for x in np.linspace(0.0, 0.5, 211):
            y = entropy_H(x)
            assert abs(inv_entropy(y) - x) < 1e-10

    @given(st.floats(0.0, 0.5))
    @settings(max_examples=80, deadline=None)
    def test_inverse_roundtrip_hypothesis(self, x):
        assert entropy_H(inv_entropy(entropy_H(x))) == pytest.approx(
            entropy_H(x), abs=1e-12
        )

    def test_inverse_domain(self):
        with pytest.raises(ValueError):
            inv_entropy(LOG2 + 1e-9)
        with pytest.raises(ValueError):
            inv_entropy(-1e-12)


class TestPsiChain:
    def test_psi_endpoints(self):
        assert psi(0.0) == 0.0
        assert psi(1.0) == pytest.approx(TWO_LOG2, abs=1e-15)
        assert psi(0.7) == pytest.approx(PSI_07, abs=1e-14)

    def test_h_is_psi_of_square(self):
        for t in np.linspace(0.0, 1.0, 57):
            assert h_of(t) == pytest.approx(psi(t * t), abs=1e-13)

    def test_h_values(self):
        assert h_of(0.0) == 0.0
        assert h_prime(0.0) == 0.0
        assert h_of(0.3) == pytest.approx(H_03, abs=1e-15)
        assert h_prime(0.3) == pytest.approx(HP_03, abs=1e-14)
        assert h_second(0.3) == pytest.approx(HPP_03, abs=1e-14)

    def test_h_second_at_zero_matches_finite_difference(self):
        fd = (h_prime(1e-6) - h_prime(0.0)) / 1e-6
        assert h_second(0.0) == 4.0
        assert fd == pytest.approx(4.0, abs=1e-5)

    def test_h_second_diverges_at_one(self):
        with pytest.raises(ValueError):
            h_second(1.0)
        assert math.isfinite(h_prime(1.0))

    def test_phi_endpoints_and_roundtrip(self):
        assert phi(0.0) == 0.0
        assert phi(TWO_LOG2) == pytest.approx(1.0, abs=1e-12)
        assert phi(psi(0.7)) == pytest.approx(0.7, abs=1e-11)

    @given(st.floats(0.0, 1.0))
    @settings(max_examples=80, deadline=None)
    def test_phi_psi_roundtrip_hypothesis(self, t):
        assert abs(phi(psi(t)) - t) <= 1e-11

    def test_xi_endpoints(self):
        assert xi(0.0) == 0.0
        assert xi(1.0) == pytest.approx(LOG2, abs=1e-15)
        assert xi(0.5) == pytest.approx(psi(0.5) / 1.5, abs=1e-15)

    def test_alpha_endpoints_and_roundtrip(self):
        assert alpha(0.0) == 0.0
        assert alpha(LOG2) == pytest.approx(1.0, abs=1e-12)
        assert alpha(xi(0.4)) == pytest.approx(0.4, abs=1e-11)

    def test_roundtrip_grids(self):
        for t in np.linspace(0.0, 1.0, 1001):
            assert abs(phi(psi(t)) - t) <= 1e-11
            assert abs(alpha(xi(t)) - t) <= 1e-11

    def test_tau(self):
        assert tau(0.0) == 0.5
        assert tau(TWO_LOG2) == pytest.approx(1.0 / TWO_LOG2, abs=1e-14)
        for t in (0.1, 0.35, 0.8):
            y = psi(t)
            assert tau(y) * y == pytest.approx(t, abs=1e-11)

    def test_tau_increasing(self):
        grid = np.linspace(1e-6, TWO_LOG2, 500)
        vals = [tau(y) for y in grid]
        assert all(b > a for a, b in zip(vals, vals[1:]))


class TestConstantFunction:
    def test_endpoints(self):
        assert c_alpha(0.0) == 2.0
        assert c_explicit(0.0) == 2.0
        assert c_alpha(LOG2) == pytest.approx(2.0 / LOG2, abs=1e-12)
        assert c_explicit(LOG2) == pytest.approx(2.0 / LOG2, abs=1e-12)

    def test_routes_agree_spot(self):
        assert c_alpha(0.3) == pytest.approx(c_explicit(0.3), abs=1e-9)

    def test_routes_agree_grid(self):
        for t in np.linspace(0.0, LOG2, 2000):
            assert abs(c_alpha(t) - c_explicit(t)) <= 1e-9

    def test_identity_behind_the_explicit_form(self):
        # xi(a) = log 2 - H((1 - sqrt(a))^2 / (2 (1 + a))) on [0, 1]
        for a in np.linspace(0.0, 1.0, 301):
            u = (1.0 - math.sqrt(a)) ** 2 / (2.0 * (1.0 + a))
            assert xi(a) == pytest.approx(LOG2 - entropy_H(u), abs=1e-13)


def _strictly_increasing(fn, lo, hi, slack=1e-6, points=1000):
    grid = np.linspace(lo, hi, points)
    vals = [fn(x) for x in grid]
    return all(b - a > -slack for a, b in zip(vals, vals[1:]))


def _second_differences(fn, lo, hi, points=1000):
    grid = np.linspace(lo, hi, points)
    vals = np.array([fn(x) for x in grid])
    return vals[2:] - 2.0 * vals[1:-1] + vals[:-2]


class TestShape:
    def test_monotonicity(self):
        assert _strictly_increasing(psi, 0.0, 1.0)
        assert _strictly_increasing(phi, 0.0, TWO_LOG2)
        assert _strictly_increasing(xi, 0.0, 1.0)
        assert _strictly_increasing(alpha, 0.0, LOG2)
        assert _strictly_increasing(c_alpha, 0.0, LOG2)
        assert _strictly_increasing(c_explicit, 0.0, LOG2)

    def test_concavity_psi_xi(self):
        assert np.all(_second_differences(psi, 0.0, 1.0) <= 1e-6)
        assert np.all(_second_differences(xi, 0.0, 1.0) <= 1e-6)

    def test_convexity_phi_alpha_c(self):
        assert np.all(_second_differences(phi, 0.0, TWO_LOG2) >= -1e-6)
        assert np.all(_second_differences(alpha, 0.0, LOG2) >= -1e-6)
        assert np.all(_second_differences(c_explicit, 0.0, LOG2) >= -1e-6)

    def test_h_first_order_bounds(self):
        # h' >= h >= 0 away from the right endpoint
        for t in np.linspace(0.0, 0.999, 800):
            h = h_of(t)
            assert h >= -1e-15
            assert h_prime(t) >= h - 1e-12

    def test_h_curvature_bound(self):
        # (1 - t^2) h' >= t h''
        for t in np.linspace(0.0, 0.999, 800):
            assert (1.0 - t * t) * h_prime(t) >= t * h_second(t) - 1e-12


class TestTolerance:
    def test_validation(self):
        with pytest.raises(ValueError):
            Tolerance(abs_tol=0.0)
        with pytest.raises(ValueError):
            Tolerance(max_bisect_iters=0)

    def test_defaults(self):
        tol = Tolerance()
        assert tol.abs_tol == 1e-12
        assert tol.max_bisect_iters == 200

    def test_residual_contract(self):
        tol = Tolerance()
        for y in np.linspace(1e-6, LOG2 - 1e-6, 101):
            x = inv_entropy(y, tol)
            assert abs(entropy_H(x) - y) <= tol.abs_tol
