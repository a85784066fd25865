import math

import numpy as np
import pytest

from hilbertnorm import DomainError
from hilbertnorm.function_space import (
    NormEstimate,
    SpaceSpec,
    TaylorFunction,
    bergman_norm,
    evaluate,
    evaluation_tail_bound,
    falpha_coeffs,
    falpha_value,
    korenblum_norm,
)


class TestTaylorFunction:
    def test_validation(self):
        with pytest.raises(DomainError):
            TaylorFunction(np.array([]))

    def test_json_round_trip(self):
        f = TaylorFunction([1.0, 2.0 + 3.0j, -0.5j])
        g = TaylorFunction.from_json(f.to_json())
        assert np.array_equal(f.coeffs, g.coeffs)

    def test_bad_json(self):
        with pytest.raises(DomainError):
            TaylorFunction.from_json([[1.0], [2.0]])


class TestEvaluate:
    def test_constant(self):
        f = TaylorFunction([1.0])
        for z in (0.0, 0.5j, -0.3 + 0.4j):
            assert evaluate(f, z) == 1.0

    def test_geometric(self):
        f = TaylorFunction(np.ones(64))
        val = evaluate(f, 0.5)
        tail = evaluation_tail_bound(f, 0.5)
        assert tail == pytest.approx(2.0 * 0.5**64, rel=1e-12)
        assert abs(val - 2.0) <= tail

    def test_domain(self):
        f = TaylorFunction([1.0, 1.0])
        with pytest.raises(DomainError):
            evaluate(f, 1.0)
        with pytest.raises(DomainError):
            evaluate(f, 2.0j)


class TestFalpha:
    def test_first_coefficient(self):
        f = falpha_coeffs(0.5, 4)
        assert f.coeffs[0] == 1.0
        assert f.coeffs[1] == 0.5

    def test_value_at_zero_is_one(self):
        f = falpha_coeffs(0.5, 16)
        assert evaluate(f, 0.0) == 1.0

    def test_closed_form_at_half(self):
        f = falpha_coeffs(0.5, 256)
        assert evaluate(f, 0.5) == pytest.approx(math.sqrt(2.0), abs=1e-12)
        assert complex(falpha_value(0.5, 0.5)) == pytest.approx(math.sqrt(2.0), abs=1e-14)

    def test_coefficients_positive_decreasing(self):
        f = falpha_coeffs(0.9, 512)
        c = f.coeffs.real
        assert np.all(c > 0.0)
        assert np.all(np.diff(c) < 0.0)

    def test_doubling_ratio_limit(self):
        # a_k ~ k^(alpha-1)/Gamma(alpha), so a_{2k}/a_k -> 2^(alpha-1);
        # oracle = the recurrence itself run far out
        alpha = 0.9
        f = falpha_coeffs(alpha, 40001)
        c = f.coeffs.real
        k = 20000
        assert abs(c[2 * k] / c[k] - 2.0 ** (alpha - 1.0)) < 2e-4

    def test_domain(self):
        with pytest.raises(DomainError):
            falpha_coeffs(0.0, 8)
        with pytest.raises(DomainError):
            falpha_coeffs(1.0, 8)
        with pytest.raises(DomainError):
            falpha_coeffs(0.5, 0)


class TestBergmanNorm:
    def test_constant_is_one(self):
        for p in (2.5, 3.0, 3.5):
            est = bergman_norm(TaylorFunction([1.0]), p)
            assert est.value == pytest.approx(1.0, abs=1e-11)

    def test_monomials(self):
        # ||z^k||^p = 2/(kp+2) in the normalized polar form
        for p in (2.5, 3.0, 3.5):
            for k in range(4):
                coeffs = np.zeros(k + 1)
                coeffs[k] = 1.0
                est = bergman_norm(TaylorFunction(coeffs), p)
                assert abs(est.value - (2.0 / (k * p + 2.0)) ** (1.0 / p)) < 1e-8

    def test_spec_examples(self):
        assert bergman_norm(TaylorFunction([0, 1]), 3.0).value == pytest.approx(0.4 ** (1 / 3), abs=1e-10)
        assert bergman_norm(TaylorFunction([0, 0, 1]), 3.0).value == pytest.approx(0.25 ** (1 / 3), abs=1e-10)

    def test_homogeneity(self):
        rng = np.random.default_rng(3)
        coeffs = rng.standard_normal(12) + 1j * rng.standard_normal(12)
        f = TaylorFunction(coeffs)
        scaled = TaylorFunction(coeffs * (-2.5 + 1.0j))
        a = bergman_norm(f, 3.0).value
        b = bergman_norm(scaled, 3.0).value
        assert b == pytest.approx(abs(-2.5 + 1.0j) * a, rel=1e-10)

    def test_domain(self):
        with pytest.raises(DomainError):
            bergman_norm(TaylorFunction([1.0]), 0.0)


class TestKorenblumNorm:
    def test_constant(self):
        est = korenblum_norm(TaylorFunction([1.0]), 0.5)
        assert est.value == pytest.approx(1.0, abs=1e-12)

    def test_falpha_reaches_two_to_alpha(self):
        for alpha in (0.3, 0.5, 0.8):
            est = korenblum_norm(lambda z, a=alpha: falpha_value(a, z), alpha)
            assert abs(est.value - 2.0**alpha) < 1e-3

    def test_normalized_falpha_is_one(self):
        alpha = 0.6
        g = lambda z: falpha_value(alpha, z) / 2.0**alpha
        est = korenblum_norm(g, alpha)
        assert abs(est.value - 1.0) < 1e-3

    def test_homogeneity(self):
        alpha = 0.4
        f = lambda z: falpha_value(alpha, z)
        g = lambda z: 3.25 * falpha_value(alpha, z)
        a = korenblum_norm(f, alpha).value
        b = korenblum_norm(g, alpha).value
        assert b == pytest.approx(3.25 * a, rel=1e-10)

    def test_grid_refinement_monotone(self):
        alpha = 0.5
        f = lambda z: falpha_value(alpha, z)
        # n -> 2n - 1 keeps the coarse radial ladder as a subset
        coarse = korenblum_norm(f, alpha, n_r=101, n_theta=64, refine=False)
        fine = korenblum_norm(f, alpha, n_r=201, n_theta=64, refine=False)
        assert fine.value >= coarse.value
        refined_coarse = korenblum_norm(f, alpha, n_r=101, n_theta=64, refine=True)
        refined_fine = korenblum_norm(f, alpha, n_r=201, n_theta=64, refine=True)
        assert refined_fine.value >= refined_coarse.value - 1e-12

    def test_radial_profile_increases_to_limit(self):
        # (1-r^2)^a |f_a(r)| climbs monotonically toward 2^a on the real axis
        alpha = 0.7
        r = np.linspace(0.0, 1.0 - 1e-9, 200)
        profile = (1.0 - r * r) ** alpha * np.abs(falpha_value(alpha, r))
        assert np.all(np.diff(profile) > -1e-14)
        assert profile[-1] == pytest.approx(2.0**alpha, rel=1e-7)

    def test_taylor_input_reports_tail(self):
        est = korenblum_norm(falpha_coeffs(0.5, 64), 0.5)
        assert est.tail_bound > 0.0

    def test_domain(self):
        with pytest.raises(DomainError):
            korenblum_norm(TaylorFunction([1.0]), 1.5)


class TestSpaceSpec:
    def test_valid(self):
        assert SpaceSpec.bergman(3.0).p == 3.0
        assert SpaceSpec.korenblum(0.5).alpha == 0.5

    def test_invalid(self):
        with pytest.raises(DomainError):
            SpaceSpec.bergman(4.5)
        with pytest.raises(DomainError):
            SpaceSpec.korenblum(0.0)
        with pytest.raises(DomainError):
            SpaceSpec("hardy", p=2.0)


def test_norm_estimate_json():
    est = NormEstimate(1.5, {"n_theta": 4}, 0.0)
    payload = est.to_json()
    assert payload["value"] == 1.5
    assert payload["grid"] == {"n_theta": 4}
