import math

import numpy as np
import pytest

from hilbertnorm import DomainError
from hilbertnorm.lemma_verify import (
    F_p_eval,
    F_p_prime,
    H_ps_eval,
    check_beta_bound,
    check_lemma32,
    default_grid,
    g_x_eval,
    h_y_eval,
    margin_rows,
    psi_p_eval,
    run_verification,
    t0_root,
)

SQRT3 = math.sqrt(3.0)


class TestGx:
    def test_vanishes_at_unit_interval_ends(self):
        for x in (1.5, 2.0, 2.5, 5.0, 20.0):
            assert abs(g_x_eval(x, 0.0)) < 1e-10
            assert abs(g_x_eval(x, 1.0)) < 1e-10

    def test_negative_inside(self):
        assert g_x_eval(2.0, 0.5) < 0.0

    def test_convexity_surrogate(self):
        # positive second central differences in y on interior points
        h = 1e-4
        for x in (1.5, 3.0, 10.0):
            for y in np.linspace(0.1, 0.9, 9):
                d2 = g_x_eval(x, y + h) - 2.0 * g_x_eval(x, y) + g_x_eval(x, y - h)
                assert d2 > 0.0

    def test_domain(self):
        with pytest.raises(DomainError):
            g_x_eval(0.5, 0.5)
        with pytest.raises(DomainError):
            g_x_eval(2.0, 1.5)


class TestHy:
    def test_zero_at_one(self):
        for y in (0.1, 0.3, 0.8):
            assert abs(h_y_eval(1.0, y)) < 1e-13

    def test_closed_form_spot(self):
        # Gamma arithmetic: the value at (2, 1/2) is log(4/3) - log(3/2)
        assert h_y_eval(2.0, 0.5) == pytest.approx(math.log(4.0 / 3.0) - math.log(1.5), abs=1e-13)

    def test_nonincreasing_in_x(self):
        for y in (0.2, 0.5, 0.9):
            xs = np.linspace(1.0, 40.0, 80)
            vals = [h_y_eval(x, y) for x in xs]
            assert all(b <= a + 1e-12 for a, b in zip(vals, vals[1:]))

    def test_monotonicity_spot(self):
        assert h_y_eval(3.0, 0.5) < h_y_eval(2.0, 0.5)

    def test_equivalence_with_margin_sign(self):
        rng = np.random.default_rng(8)
        for _ in range(60):
            x = rng.uniform(1.0 + 1e-6, 30.0)
            y = rng.uniform(0.01, 0.99)
            assert (h_y_eval(x, y) < 0.0) == (check_beta_bound(x, y) > 0.0)


class TestBetaBound:
    def test_gamma_recurrence_spot(self):
        # B(2, 1/2) = Gamma(2)Gamma(1/2)/Gamma(5/2) = 4/3
        assert check_beta_bound(2.0, 0.5) == pytest.approx(1.5 - 4.0 / 3.0, abs=1e-13)

    def test_equality_boundary_as_x_to_one(self):
        # B(1, y) = 1/y exactly, so the margin collapses at x -> 1+
        assert abs(check_beta_bound(1.0 + 1e-9, 0.4)) < 1e-7

    def test_positive_far_field(self):
        assert check_beta_bound(10.0, 0.9) > 0.0

    def test_domain(self):
        with pytest.raises(DomainError):
            check_beta_bound(0.9, 0.5)


class TestLemma32:
    def test_spot_p3(self):
        # B(2/3, 2) = 9/10 by the Gamma recurrence
        assert check_lemma32(3.0) == pytest.approx(1.0 - 0.9, abs=1e-12)

    def test_spot_p_five_halves(self):
        # B(4/5, 1) = 5/4, RHS = 4/3
        assert check_lemma32(2.5) == pytest.approx(4.0 / 3.0 - 1.25, abs=1e-12)

    def test_near_upper_end(self):
        assert check_lemma32(3.9) >= 0.0

    def test_domain(self):
        for bad in (2.0, 4.0, 1.0):
            with pytest.raises(DomainError):
                check_lemma32(bad)


class TestPsiP:
    def test_substitution_spot(self):
        assert psi_p_eval(4.0, 0.5) == pytest.approx(2.0, rel=1e-14)
        assert psi_p_eval(3.0, 0.25) == pytest.approx(0.25 ** (-1 / 3) * 0.75 ** (-2 / 3), rel=1e-14)

    def test_integral_is_reflection_value(self):
        from hilbertnorm.quadrature import integrate

        for p in (2.5, 3.0, 3.7):
            res = integrate(
                lambda x, dl, dr, p=p: dl ** (2.0 / p - 1.0) * dr ** (-2.0 / p),
                0.0,
                1.0,
                distances=True,
            )
            assert res.value == pytest.approx(math.pi / math.sin(2.0 * math.pi / p), abs=1e-9)

    def test_domain(self):
        with pytest.raises(DomainError):
            psi_p_eval(3.0, 0.0)
        with pytest.raises(DomainError):
            psi_p_eval(4.2, 0.5)


class TestFp:
    def test_zero_at_one(self):
        for p in (2.2, 3.0, 3.8):
            assert abs(F_p_eval(p, 1.0)) < 1e-9

    def test_value_at_zero_p3(self):
        # (1/2) B(2/3,1/3) - B(8/3,1/3) = pi/sqrt(3) - 10 pi/(9 sqrt 3) = -pi/(9 sqrt 3)
        assert F_p_eval(3.0, 0.0) == pytest.approx(-math.pi / (9.0 * SQRT3), abs=1e-8)

    def test_nonpositive_spot(self):
        assert F_p_eval(3.8, 0.5) <= 1e-9

    def test_domain(self):
        with pytest.raises(DomainError):
            F_p_eval(3.0, 1.5)
        with pytest.raises(DomainError):
            F_p_eval(4.1, 0.5)


class TestFpPrime:
    def test_finite_difference_consistency(self):
        h = 1e-4
        fd = (F_p_eval(3.0, 0.5 + h) - F_p_eval(3.0, 0.5 - h)) / (2.0 * h)
        assert abs(F_p_prime(3.0, 0.5) - fd) < 1e-5

    def test_nonnegative_in_monotone_range(self):
        for s in np.linspace(0.1, 0.9, 9):
            assert F_p_prime(3.8, s) >= -1e-9

    def test_vanishes_at_one_p3(self):
        assert abs(F_p_prime(3.0, 1.0)) < 1e-9

    def test_domain(self):
        with pytest.raises(DomainError):
            F_p_prime(3.0, 0.0)


class TestT0Root:
    def test_closed_form_spot(self):
        t0 = t0_root(3.0, 0.5)
        assert t0 == pytest.approx(3.0 / 7.0, rel=1e-14)
        assert abs(H_ps_eval(3.0, 0.5, t0)) < 1e-12

    def test_no_root_above_critical_p(self):
        assert t0_root(3.8, 0.5) is None

    def test_root_stays_left_of_s(self):
        for s in (0.1, 0.5, 0.999):
            t0 = t0_root(3.0, s)
            assert t0 is not None
            assert 0.0 <= t0 < s

    def test_critical_p_boundary(self):
        p_crit = 2.0 + SQRT3
        t0_below = t0_root(p_crit - 1e-6, 0.5)
        assert t0_below is not None and t0_below < 1e-5
        assert t0_root(p_crit + 1e-6, 0.5) is None

    def test_domain(self):
        with pytest.raises(DomainError):
            t0_root(3.0, 1.0)


class TestHps:
    def test_positive_when_no_root(self):
        # exponent 8 - 2p - 2/p < 0 at p = 3.8 makes the t = 0 value positive
        assert H_ps_eval(3.8, 0.5, 0.0) == pytest.approx(0.5 ** (8 - 7.6 - 2 / 3.8) - 1.0, rel=1e-12)
        assert H_ps_eval(3.8, 0.5, 0.0) > 0.0

    def test_divergence_toward_s(self):
        vals = [H_ps_eval(3.0, 0.5, 0.5 - g) for g in (1e-2, 1e-4, 1e-8)]
        assert vals[0] < vals[1] < vals[2]
        assert vals[2] > 1e2

    def test_domain(self):
        with pytest.raises(DomainError):
            H_ps_eval(3.0, 0.5, 0.5)
        with pytest.raises(DomainError):
            H_ps_eval(3.0, 0.5, -0.1)


class TestRunVerification:
    def test_beta_bound_coarse(self):
        report = run_verification(
            "beta_bound",
            grid={"x": np.geomspace(1.01, 50.0, 20), "y": np.linspace(0.05, 0.95, 10)},
        )
        assert report.passed
        assert report.worst_margin > 0.0
        assert report.n_points == 200
        assert len(report.worst_point) == 2

    def test_beta_2p_default(self):
        report = run_verification("beta_2p")
        assert report.passed
        assert report.worst_margin >= -1e-12
        assert report.n_points == 199

    def test_fp_coarse(self):
        report = run_verification(
            "Fp_nonpositive",
            grid={"p": np.linspace(2.2, 3.8, 5), "s": np.linspace(0.0, 1.0, 5)},
        )
        assert report.passed
        assert report.worst_margin >= -1e-8

    def test_error_recorded(self):
        report = run_verification("beta_2p", grid={"p": np.array([3.0, 4.5])})
        assert not report.passed
        assert report.error is not None
        assert report.worst_point == (4.5,)

    def test_unknown_lemma(self):
        with pytest.raises(DomainError):
            run_verification("beta_cubed")

    def test_report_json_round_trips(self):
        import json

        report = run_verification("beta_2p", grid={"p": np.array([2.5, 3.0])})
        payload = json.loads(json.dumps(report.to_json()))
        assert payload["lemma_id"] == "beta_2p"
        assert payload["passed"] is True

    def test_margin_rows_shape(self):
        header, rows = margin_rows("beta_2p", grid={"p": np.array([2.5, 3.0, 3.5])})
        assert header == ["p", "margin"]
        assert len(rows) == 3
        assert rows[1][0] == 3.0
        assert rows[1][1] == pytest.approx(0.1, abs=1e-9)

    def test_default_grids_sized_like_contract(self):
        grid, tol = default_grid("beta_bound")
        assert len(grid["x"]) == 200 and len(grid["y"]) == 99
        grid, tol = default_grid("Fp_nonpositive")
        assert len(grid["p"]) == 37 and len(grid["s"]) == 21
        assert tol == 1e-8
