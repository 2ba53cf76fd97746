import math

import mpmath as mp
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from scipy.special import erfcx

from fracgreen.errors import DomainError, PrecisionLoss
from fracgreen.specfun import (
    mittag_leffler_neg,
    perturbed_gamma,
    rgamma,
    sinpi,
    wright_m,
    wright_m_integral,
)

mp.mp.dps = 50


def mp_wright_m(nu, x):
    # plain high-precision partial sum; the digits absorb the cancellation
    nu, x = mp.mpf(nu), mp.mpf(x)
    return mp.fsum((-x) ** k / mp.factorial(k) * mp.rgamma(1 - nu - nu * k) for k in range(400))


def mp_ml_neg(beta, y):
    beta, y = mp.mpf(beta), mp.mpf(y)
    return mp.nsum(lambda k: (-y) ** k / mp.gamma(beta * k + 1), [0, mp.inf])


def mp_ml_laplace(beta, y, t=1):
    # E_beta(-y t^beta) has transform s^(beta-1) / (s^beta + y)
    return mp.invertlaplace(lambda s: s ** (beta - 1) / (s**beta + y), t, method="talbot")


class TestWrightM:
    def test_gaussian_case(self):
        for x in (0.0, 0.3, 1.0, 2.0, 4.0):
            assert wright_m(0.5, x).value == pytest.approx(math.exp(-x * x / 4) / math.sqrt(math.pi), abs=1e-12)

    def test_looser_tolerance_reaches_further(self):
        with pytest.raises(PrecisionLoss):
            wright_m(0.5, 6.0, tol=1e-12)
        assert wright_m(0.5, 6.0, tol=1e-10).value == pytest.approx(math.exp(-9) / math.sqrt(math.pi), abs=1e-10)

    def test_origin(self):
        assert wright_m(0.5, 0.0).value == pytest.approx(1 / math.sqrt(math.pi), abs=1e-15)
        assert wright_m(0.25, 0.0).value == pytest.approx(1 / math.gamma(0.75), abs=1e-15)

    @pytest.mark.parametrize("nu", [0.1, 0.25, 0.375, 0.45])
    @pytest.mark.parametrize("x", [0.1, 0.7, 1.5, 3.0])
    def test_against_mpmath(self, nu, x):
        assert wright_m(nu, x).value == pytest.approx(float(mp_wright_m(nu, x)), abs=1e-12)

    @pytest.mark.parametrize("nu", [0.125, 0.25, 0.375])
    def test_forms_agree(self, nu):
        for x in (0.2, 1.0, 2.5):
            a = wright_m(nu, x).value
            b = wright_m(nu, x, form="reflection").value
            assert a == pytest.approx(b, abs=1e-13)

    def test_metadata(self):
        v = wright_m(0.25, 1.0)
        assert v.converged and v.method == "series"
        assert 0.0 <= v.abs_error_estimate <= 1e-12
        assert v.terms_used > 5
        assert float(v) == v.value

    def test_precision_loss_is_raised_not_hidden(self):
        with pytest.raises(PrecisionLoss):
            wright_m(0.25, 25.0)

    def test_integral_representation(self):
        for nu, x in ((0.25, 3.0), (0.375, 2.0), (0.25, 25.0)):
            ref = float(mp_wright_m(nu, x)) if x < 10 else None
            v = wright_m_integral(nu, x)
            assert v.method == "integral"
            if ref is not None:
                assert v.value == pytest.approx(ref, abs=1e-11)
            else:
                assert 0.0 < v.value < 1e-8

    def test_domain(self):
        with pytest.raises(DomainError):
            wright_m(1.0, 1.0)
        with pytest.raises(DomainError):
            wright_m(0.0, 1.0)
        with pytest.raises(DomainError):
            wright_m(0.5, -1.0)
        with pytest.raises(ValueError, match="form"):
            wright_m(0.5, 1.0, form="nope")

    @settings(max_examples=40, deadline=None)
    @given(nu=st.floats(0.05, 0.5), x=st.floats(0.0, 12.0))
    def test_value_within_tol_or_raises(self, nu, x):
        try:
            v = wright_m(nu, x, tol=1e-10)
        except PrecisionLoss:
            return
        mp.mp.dps = 60
        assert abs(v.value - float(mp_wright_m(nu, x))) <= 1e-10


class TestMittagLeffler:
    @pytest.mark.parametrize("y", [0.0, 0.1, 1.0, 4.0, 25.0, 1e3, 1e6])
    def test_half_order_is_erfcx(self, y):
        assert mittag_leffler_neg(0.5, y).value == pytest.approx(float(erfcx(y)), abs=1e-12)

    def test_unit_order_is_exponential(self):
        for y in (0.0, 0.5, 3.0, 50.0):
            assert mittag_leffler_neg(1.0, y).value == pytest.approx(math.exp(-y), abs=1e-12)

    @pytest.mark.parametrize("beta", [0.25, 0.5, 0.75, 0.9])
    @pytest.mark.parametrize("y", [0.3, 1.0, 3.0])
    def test_small_argument_series(self, beta, y):
        assert mittag_leffler_neg(beta, y).value == pytest.approx(float(mp_ml_neg(beta, y)), abs=1e-12)

    @pytest.mark.parametrize("beta", [0.25, 0.6, 0.75, 0.9])
    @pytest.mark.parametrize("y", [8.0, 40.0, 300.0])
    def test_large_argument(self, beta, y):
        assert mittag_leffler_neg(beta, y).value == pytest.approx(float(mp_ml_laplace(beta, y)), abs=1e-11)

    def test_complete_monotonicity(self):
        ys = [0.1 * 1.5**k for k in range(30)]
        for beta in (0.3, 0.7):
            vals = [mittag_leffler_neg(beta, y).value for y in ys]
            assert all(0.0 < b < a for a, b in zip(vals, vals[1:]))

    def test_methods_are_tagged(self):
        methods = {mittag_leffler_neg(0.75, y).method for y in (0.5, 30.0, 1e8)}
        assert methods <= {"series", "asymptotic", "spectral"}
        assert "series" in methods

    def test_domain(self):
        with pytest.raises(DomainError):
            mittag_leffler_neg(1.5, 1.0)
        with pytest.raises(DomainError):
            mittag_leffler_neg(0.5, -1.0)


class TestHelpers:
    def test_rgamma_poles(self):
        for n in range(0, 6):
            assert rgamma(-float(n)) == 0.0
        assert rgamma(0.5) == pytest.approx(1 / math.sqrt(math.pi), rel=1e-15)
        assert rgamma(-0.5) == pytest.approx(1 / math.gamma(-0.5), rel=1e-14)

    def test_sinpi_exact(self):
        assert sinpi(3.0) == 0.0
        assert sinpi(-2.0) == 0.0
        assert sinpi(0.5) == 1.0
        assert sinpi(1.5) == -1.0
        assert sinpi(0.25) == pytest.approx(math.sqrt(0.5), rel=1e-15)

    def test_gamma_perturbation_hook(self):
        base = wright_m(0.25, 1.0).value
        with perturbed_gamma(1e-4):
            moved = wright_m(0.25, 1.0).value
        assert abs(moved - base) > 1e-6
        assert wright_m(0.25, 1.0).value == base
