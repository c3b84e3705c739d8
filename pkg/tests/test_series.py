from fractions import Fraction as Fr

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cube_sobolev.series import (
    F_series,
    G_series,
    RationalSeries,
    coefficient_pairs,
    explicit_ell,
    explicit_r,
    hprop_series,
    l1_series,
    l2_series,
    series_ell,
    series_r,
    verify_coefficient_properties,
    verify_hprop_series,
)


class TestRationalSeries:
    def test_polynomial_is_exact(self):
        p = RationalSeries.polynomial({0: 1, 3: -2})
        assert p.k_max is None
        assert p.coeff(0) == 1 and p.coeff(3) == -2
        assert p.coeff(100) == 0

    def test_truncated_coeff_access(self):
        s = RationalSeries((Fr(1), Fr(2)), k_max=1)
        assert s.coeff(1) == 2
        with pytest.raises(IndexError):
            s.coeff(2)

    def test_mul_truncates_to_min(self):
        a = RationalSeries((Fr(1), Fr(1)), k_max=1)
        b = RationalSeries((Fr(1), Fr(1), Fr(1)), k_max=2)
        assert (a * b).k_max == 1
        assert (a + b).k_max == 1

    def test_poly_times_series_keeps_degree(self):
        p = RationalSeries.polynomial({1: 2})
        s = RationalSeries((Fr(0), Fr(1), Fr(1)), k_max=2)
        prod = p * s
        assert prod.k_max == 2
        assert prod.coeff(2) == 2

    @given(
        st.lists(st.integers(-4, 4), min_size=1, max_size=5),
        st.lists(st.integers(-4, 4), min_size=1, max_size=5),
    )
    @settings(max_examples=60, deadline=None)
    def test_poly_product_matches_convolution(self, xs, ys):
        a = RationalSeries.polynomial({i: v for i, v in enumerate(xs)})
        b = RationalSeries.polynomial({i: v for i, v in enumerate(ys)})
        prod = a * b
        for p in range(len(xs) + len(ys) - 1):
            want = sum(
                Fr(xs[i]) * Fr(ys[p - i])
                for i in range(len(xs))
                if 0 <= p - i < len(ys)
            )
            assert prod.coeff(p) == want


class TestLogSeries:
    def test_l1_coefficients(self):
        l1 = l1_series(10)
        assert l1.coeff(1) == 2
        assert l1.coeff(3) == Fr(2, 3)
        assert l1.coeff(2) == 0

    def test_l2_is_degree_doubled(self):
        l2 = l2_series(10)
        assert l2.coeff(2) == 2
        assert l2.coeff(4) == 0
        assert l2.coeff(6) == Fr(2, 3)
        l1 = l1_series(10)
        for p in range(0, 21):
            expect = l1.coeff(p // 2) if p % 2 == 0 else Fr(0)
            assert l2.coeff(p) == expect

    def test_kmax_validation(self):
        with pytest.raises(ValueError):
            l1_series(0)
        with pytest.raises(ValueError):
            F_series(6)


class TestCoefficients:
    def test_initial_values(self):
        f, g = F_series(8), G_series(8)
        assert f.coeff(1) == 0 and g.coeff(1) == 0
        assert f.coeff(3) == 16 and g.coeff(3) == 16
        assert f.coeff(5) == 16 and g.coeff(5) == 16

    def test_even_powers_vanish(self):
        f, g = F_series(10), G_series(10)
        for p in range(0, 21, 2):
            assert f.coeff(p) == 0
            assert g.coeff(p) == 0

    def test_hand_computed_x7(self):
        # convolution by hand: [x^7] F = 32/5, [x^7] G = 16/45
        assert F_series(8).coeff(7) == Fr(32, 5)
        assert G_series(8).coeff(7) == Fr(16, 45)

    def test_closed_forms_match_series(self):
        ell, r = series_ell(40), series_r(40)
        for k in range(3, 41):
            assert explicit_ell(k) == ell[k], k
            assert explicit_r(k) == r[k], k

    def test_spot_values(self):
        assert explicit_r(3) == Fr(4, 45)
        assert explicit_ell(3) == Fr(8, 5)

    def test_coefficient_pairs(self):
        pairs = coefficient_pairs(5)
        assert [p.k for p in pairs] == list(range(6))
        assert pairs[1].ell == 4 and pairs[1].r == 4
        assert pairs[3].ell == Fr(8, 5) and pairs[3].r == Fr(4, 45)

    def test_closed_form_domain(self):
        with pytest.raises(ValueError):
            explicit_ell(2)
        with pytest.raises(ValueError):
            explicit_r(2)

    def test_truncation_soundness(self):
        small, large = F_series(12), F_series(22)
        for p in range(2 * 12 + 2):
            assert small.coeff(p) == large.coeff(p)


class TestVerifyProperties:
    def test_clean_pass(self):
        report = verify_coefficient_properties(12)
        assert report.violations == 0
        assert all(c.status == "pass" for c in report.checks)

    def test_injected_perturbation_is_caught(self):
        # pushing ell_3 (index k=1) to 5 must fail with a witness
        report = verify_coefficient_properties(8, ell_override={1: Fr(5)})
        assert report.violations >= 1
        failed = [c for c in report.checks if c.status == "fail"]
        assert any(c.witness and c.witness.get("k") == 1 for c in failed)

    def test_kmax_validation(self):
        with pytest.raises(ValueError):
            verify_coefficient_properties(4)


class TestHprop:
    def test_linear_coefficient_zero(self):
        s = hprop_series(10)
        assert s.coeff(1) == 0

    def test_cubic_coefficient_positive(self):
        assert hprop_series(10).coeff(3) == Fr(2, 3)

    def test_all_nonnegative(self):
        s = hprop_series(60)
        assert all(s.coeff(p) >= 0 for p in range(2 * 60 + 2))

    def test_report(self):
        report = verify_hprop_series(50)
        assert report.violations == 0
        assert len(report.checks) == 2

    def test_kmax_validation(self):
        with pytest.raises(ValueError):
            verify_hprop_series(2)
