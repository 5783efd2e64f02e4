import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from circleinterp import (
    LaurentPolynomial,
    ValidationError,
    coefficients_from_samples,
    eval_laurent,
    make_degree_plan,
)


class TestDegreePlan:
    def test_n9_half(self):
        plan = make_degree_plan(9, 0.5)
        assert (plan.p, plan.q, plan.s) == (4, 4, 4)

    def test_n10_half_floor(self):
        plan = make_degree_plan(10, 0.5)
        assert (plan.p, plan.q, plan.s) == (4, 5, 4)

    def test_n101_r07(self):
        plan = make_degree_plan(101, 0.7)
        assert (plan.p, plan.q, plan.s) == (70, 30, 30)
        # for r > 1/2 the limiting ratio of s is 1 - r
        assert plan.s / (plan.n - 1) == pytest.approx(0.3, abs=1e-12)

    @pytest.mark.parametrize("n,r", [(1, 0.5), (2, 0.0), (2, 1.0), (5, -0.1)])
    def test_invalid_arguments(self, n, r):
        with pytest.raises(ValidationError):
            make_degree_plan(n, r)

    @given(st.integers(2, 2000), st.floats(1e-6, 1 - 1e-6))
    def test_ratio_tracking(self, n, r):
        plan = make_degree_plan(n, r)
        assert plan.p + plan.q == n - 1
        assert abs(plan.p / (n - 1) - r) <= 1.0 / (n - 1)
        assert plan.s == min(plan.p, plan.q)


class TestEvalLaurent:
    def test_z(self):
        L = LaurentPolynomial(p=0, q=1, coeffs=[0, 1])
        assert eval_laurent(L, 1j) == pytest.approx(1j)

    def test_one_over_z(self):
        L = LaurentPolynomial(p=1, q=0, coeffs=[1, 0])
        assert eval_laurent(L, 1j) == pytest.approx(-1j)

    def test_mixed(self):
        L = LaurentPolynomial(p=1, q=1, coeffs=[2, 3, 4])  # 2/z + 3 + 4z
        assert eval_laurent(L, 1.0) == pytest.approx(9.0)

    def test_rejects_origin(self):
        L = LaurentPolynomial(p=1, q=0, coeffs=[1, 0])
        with pytest.raises(ValidationError):
            eval_laurent(L, 0.0)

    def test_triangle_inequality_on_circle(self, rng):
        coeffs = rng.standard_normal(9) + 1j * rng.standard_normal(9)
        L = LaurentPolynomial(p=4, q=4, coeffs=coeffs)
        z = np.exp(1j * rng.uniform(0, 2 * np.pi, 64))
        assert np.all(np.abs(eval_laurent(L, z)) <= np.sum(np.abs(coeffs)) + 1e-12)


class TestCoefficientRecovery:
    def test_pure_square(self):
        m = 4
        z = np.exp(2j * np.pi * np.arange(m) / m)
        L = coefficients_from_samples(z**2, p=1)
        expected = np.zeros(m, dtype=complex)
        expected[3] = 1.0  # exponent +2 at index 2 - (-1)... offset p=1
        assert np.allclose(L.coeffs, expected, atol=1e-14)
        assert L.coefficient(2) == pytest.approx(1.0)

    def test_single_sample_constant(self):
        L = coefficients_from_samples([5.0], p=0)
        assert L.p == 0 and L.q == 0
        assert L.coefficient(0) == pytest.approx(5.0)

    def test_negative_and_positive_exponents(self):
        m = 8
        z = np.exp(2j * np.pi * np.arange(m) / m)
        L = coefficients_from_samples(3.0 / z + 2.0 * z**3, p=2)
        assert L.coefficient(-1) == pytest.approx(3.0, abs=1e-13)
        assert L.coefficient(3) == pytest.approx(2.0, abs=1e-13)
        others = [L.coefficient(k) for k in range(-2, 6) if k not in (-1, 3)]
        assert np.max(np.abs(others)) < 1e-13

    @settings(max_examples=50, deadline=None)
    @given(st.integers(0, 12), st.integers(0, 12), st.integers(0, 2**32 - 1))
    def test_round_trip(self, p, q, seed):
        gen = np.random.default_rng(seed)
        coeffs = gen.uniform(-1, 1, p + q + 1) + 1j * gen.uniform(-1, 1, p + q + 1)
        L = LaurentPolynomial(p=p, q=q, coeffs=coeffs)
        m = p + q + 1
        z = np.exp(2j * np.pi * np.arange(m) / m)
        back = coefficients_from_samples(eval_laurent(L, z), p)
        assert np.max(np.abs(back.coeffs - coeffs)) <= 1e-12 * m

    def test_length_mismatch(self):
        with pytest.raises(ValidationError):
            coefficients_from_samples([1.0, 2.0], p=5)
