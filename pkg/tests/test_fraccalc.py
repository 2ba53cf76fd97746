import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from scipy.integrate import quad
from scipy.special import gamma

from fracgreen import fraccalc as fc
from fracgreen.errors import DomainError, TailError

GRID = np.linspace(0.0, 2.0, 801)
H = 2.0 / 800
ORDERS = (0.2, 0.4, 0.6, 0.8)
FUNCS = {
    "t^2": (lambda t: t**2, lambda t: 2.0 * t),
    "sin": (np.sin, np.cos),
    "1+t": (lambda t: 1.0 + t, lambda t: np.ones_like(t)),
}


def sampled(name, grid=GRID):
    f, df = FUNCS[name]
    return fc.SampledFunction.from_callable(f, grid, df)


def brute_rl_integral(f, alpha, t):
    # weight-aware quadrature of the singular kernel
    val, _ = quad(f, 0.0, t, weight="alg", wvar=(0.0, alpha - 1.0), epsabs=1e-13, epsrel=1e-12)
    return val / gamma(alpha)


class TestSampledFunction:
    def test_validation(self):
        with pytest.raises(DomainError):
            fc.SampledFunction(np.array([0.1, 0.2, 0.3]), np.zeros(3))
        with pytest.raises(DomainError):
            fc.SampledFunction(np.array([0.0, 0.2, 0.1]), np.zeros(3))
        with pytest.raises(DomainError):
            fc.SampledFunction(np.array([0.0, 0.2, 0.3]), np.zeros(2))
        with pytest.raises(DomainError):
            fc.SampledFunction(np.array([0.0, 1.0]), np.zeros(2))

    def test_immutable(self):
        f = sampled("sin")
        with pytest.raises(ValueError):
            f.values[0] = 1.0

    def test_arithmetic(self):
        f, g = sampled("sin"), sampled("t^2")
        h = f + 2.0 * g
        np.testing.assert_allclose(h.values, np.sin(GRID) + 2 * GRID**2)
        np.testing.assert_allclose(h.derivative(), np.cos(GRID) + 4 * GRID)

    def test_finite_difference_derivative(self):
        f = fc.SampledFunction.from_callable(np.sin, GRID)
        assert np.max(np.abs(f.derivative() - np.cos(GRID))) < 1e-5


class TestOperators:
    @pytest.mark.parametrize("alpha", [0.3, 0.5, 1.0, 1.7])
    @pytest.mark.parametrize("name", ["sin", "t^2"])
    def test_rl_integral_matches_quadrature(self, alpha, name):
        f = FUNCS[name][0]
        for t in (0.5, 1.3, 2.0):
            assert fc.rl_integral(sampled(name), alpha, t) == pytest.approx(brute_rl_integral(f, alpha, t), abs=1e-5)

    def test_half_integral_of_constant(self):
        one = fc.SampledFunction(GRID, np.ones_like(GRID))
        assert fc.rl_integral(one, 0.5, 1.0) == pytest.approx(2.0 / math.sqrt(math.pi), abs=1e-13)

    @pytest.mark.parametrize("beta", ORDERS)
    def test_caputo_power_rule(self, beta):
        f = sampled("t^2")
        for t in (0.5, 1.0, 1.5):
            expected = gamma(3.0) / gamma(3.0 - beta) * t ** (2.0 - beta)
            assert fc.caputo_derivative(f, beta, t) == pytest.approx(expected, abs=1e-6)

    def test_rl_power_rule_of_t(self):
        f = fc.SampledFunction(GRID, GRID.copy())
        assert fc.rl_derivative(f, 0.5, 1.0) == pytest.approx(2.0 / math.sqrt(math.pi), abs=1e-6)

    def test_derivatives_of_constant_differ(self):
        one = fc.SampledFunction(GRID, np.ones_like(GRID), np.zeros_like(GRID))
        for beta in ORDERS:
            assert fc.caputo_derivative(one, beta, 1.0) == 0.0
            assert fc.rl_derivative(one, beta, 1.0) == pytest.approx(1.0 / gamma(1.0 - beta), abs=1e-6)

    def test_stencil_boundary(self):
        with pytest.raises(DomainError):
            fc.rl_derivative(sampled("sin"), 0.5, 2.0)
        with pytest.raises(DomainError):
            fc.rl_derivative(sampled("sin"), 0.5, 0.0)

    def test_orders_validated(self):
        with pytest.raises(DomainError):
            fc.caputo_derivative(sampled("sin"), 1.0, 1.0)
        with pytest.raises(DomainError):
            fc.rl_integral(sampled("sin"), 0.0, 1.0)
        with pytest.raises(DomainError):
            fc.rl_integral(sampled("sin"), 0.5, 3.0)


class TestLaws:
    @pytest.mark.parametrize("name", list(FUNCS))
    @pytest.mark.parametrize("a", ORDERS)
    def test_semigroup(self, name, a):
        f = sampled(name)
        b = 1.0 - 0.5 * a
        lhs = fc.rl_integral_grid(fc.rl_integral_grid(f, b), a)
        for t in (0.5, 1.0, 1.5):
            assert abs(lhs(t) - fc.rl_integral(f, a + b, t)) <= fc.law_tolerance(H)

    @pytest.mark.parametrize("name", list(FUNCS))
    @pytest.mark.parametrize("beta", ORDERS)
    def test_left_inverse(self, name, beta):
        f = sampled(name)
        jf = fc.rl_integral_grid(f, beta)
        for t in (0.5, 1.0, 1.5):
            assert abs(fc.rl_derivative(jf, beta, t) - f(t)) <= fc.law_tolerance(H, 1.0 + beta)

    @pytest.mark.parametrize("name", list(FUNCS))
    @pytest.mark.parametrize("beta", ORDERS)
    def test_caputo_offset(self, name, beta):
        f = sampled(name)
        f0 = float(f.values[0])
        for t in (0.5, 1.0, 1.5):
            diff = fc.rl_derivative(f, beta, t) - fc.caputo_derivative(f, beta, t)
            assert abs(diff - f0 * t**-beta / gamma(1.0 - beta)) <= fc.law_tolerance(H)

    @pytest.mark.parametrize("beta", ORDERS)
    def test_laplace_rule(self, beta):
        grid = np.linspace(0.0, 40.0, 8001)
        for name in FUNCS:
            f = sampled(name, grid)
            assert fc.laplace_rule_check(f, beta, 2.0) < 1e-4

    def test_laplace_rule_exponential(self):
        grid = np.linspace(0.0, 8.0, 20001)
        f = fc.SampledFunction.from_callable(lambda t: np.exp(-t), grid, lambda t: -np.exp(-t))
        assert fc.laplace_rule_check(f, 0.5, 2.0) < 1e-8

    def test_laplace_tail_guard(self):
        f = fc.SampledFunction(np.linspace(0.0, 1.0, 101), np.ones(101), np.zeros(101))
        with pytest.raises(TailError):
            fc.laplace_rule_check(f, 0.5, 1.0)

    def test_second_order_convergence(self):
        def residual(n):
            grid = np.linspace(0.0, 2.0, n + 1)
            f = sampled("sin", grid)
            two = fc.rl_integral_grid(fc.rl_integral_grid(f, 0.5), 0.5)
            return abs(two(1.0) - fc.rl_integral(f, 1.0, 1.0))

        ratio = residual(100) / residual(400)
        assert 12.0 < ratio < 20.0


@settings(max_examples=25, deadline=None)
@given(a=st.floats(0.1, 0.9), b=st.floats(0.1, 0.9), t=st.floats(0.2, 2.0))
def test_semigroup_property(a, b, t):
    f = sampled("sin")
    lhs = fc.rl_integral(fc.rl_integral_grid(f, b), a, t)
    assert abs(lhs - fc.rl_integral(f, a + b, t)) <= fc.law_tolerance(H)


@settings(max_examples=25, deadline=None)
@given(c=st.floats(-3.0, 3.0), beta=st.floats(0.05, 0.95))
def test_caputo_is_linear_and_kills_constants(c, beta):
    f = sampled("sin")
    shifted = fc.SampledFunction(GRID, f.values + c, f.derivative_values)
    assert fc.caputo_derivative(shifted, beta, 1.0) == pytest.approx(fc.caputo_derivative(f, beta, 1.0), abs=1e-12)
