import math

import pytest

from cube_sobolev.balls import ball_lambda_star
from cube_sobolev.codes import asymptotic_rate_bound, code_size_bound, critical_radius
from cube_sobolev.special import LOG2

H2_02 = 0.7219280948873623  # binary entropy of 0.2, bits


class TestCriticalRadius:
    def test_internal_consistency(self):
        for n, d in ((100, 10), (200, 20), (300, 60)):
            r = critical_radius(n, d)
            threshold = 2.0 * (2 * d + 1)
            assert ball_lambda_star(n, r) <= threshold
            if r >= 1:
                assert ball_lambda_star(n, r - 1) > threshold

    def test_monotone_in_distance(self):
        # the threshold 2(2d+1) loosens with d, so the minimal radius shrinks
        n = 120
        radii = [critical_radius(n, d) for d in range(2, 55, 4)]
        assert all(a >= b for a, b in zip(radii, radii[1:]))
        assert radii[0] > radii[-1]

    def test_large_distance_small_radius(self):
        assert critical_radius(100, 50) <= 2

    def test_validation(self):
        with pytest.raises(ValueError):
            critical_radius(100, 51)
        with pytest.raises(ValueError):
            critical_radius(100, 0)


class TestCodeSizeBound:
    def test_record_identities(self):
        res = code_size_bound(200, 20)
        assert res.log_bound == pytest.approx(
            math.log(200) + res.log_ball_size, abs=1e-12
        )
        assert res.rate_bound_bits == pytest.approx(
            res.log_bound / (200 * LOG2), abs=1e-12
        )
        assert res.reference_radius == pytest.approx(
            100 - math.sqrt(20 * 180), abs=1e-12
        )

    def test_radius_tracks_reference_at_scale(self):
        res = code_size_bound(1000, 100)
        assert abs(res.critical_radius / 1000 - res.reference_radius / 1000) < 0.02

    def test_rate_bound_sane_at_scale(self):
        res = code_size_bound(2000, 200)
        assert res.rate_bound_bits <= 1.0

    def test_finite_n_converges_to_asymptote(self):
        target = asymptotic_rate_bound(0.1)
        errs = [
            abs(code_size_bound(n, n // 10).rate_bound_bits - target)
            for n in (500, 1000, 2000, 4000)
        ]
        assert all(a >= b for a, b in zip(errs, errs[1:]))
        assert errs[-1] < errs[0]

    def test_sits_above_its_asymptote(self):
        res = code_size_bound(4000, 400)
        assert res.rate_bound_bits >= asymptotic_rate_bound(0.1) - 0.02

    def test_extreme_distance(self):
        res = code_size_bound(2000, 1000)
        assert res.critical_radius <= 5
        assert res.rate_bound_bits < 0.05


class TestAsymptoticRate:
    def test_reference_value(self):
        assert asymptotic_rate_bound(0.1) == pytest.approx(H2_02, abs=1e-9)

    def test_limits(self):
        assert asymptotic_rate_bound(0.499999) < 1e-2
        assert asymptotic_rate_bound(1e-9) > 0.999

    def test_decreasing(self):
        vals = [asymptotic_rate_bound(d / 100) for d in range(1, 50)]
        assert all(a > b for a, b in zip(vals, vals[1:]))

    def test_domain(self):
        with pytest.raises(ValueError):
            asymptotic_rate_bound(0.0)
        with pytest.raises(ValueError):
            asymptotic_rate_bound(0.5)
