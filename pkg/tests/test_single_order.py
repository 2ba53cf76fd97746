import math

import mpmath as mp
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from scipy.special import gamma

from fracgreen import single_order as so
from fracgreen.errors import DomainError, PrecisionLoss


def heat(x, t):
    return math.exp(-x * x / (4 * t)) / (2 * math.sqrt(math.pi * t))


def test_gaussian_values():
    assert so.green(1.0, 0.0, 1.0).value == pytest.approx(1 / (2 * math.sqrt(math.pi)), abs=1e-12)
    assert so.green(1.0, 1.0, 1.0).value == pytest.approx(heat(1.0, 1.0), abs=1e-11)
    assert so.green(1.0, 2.0, 1.0).value == pytest.approx(math.exp(-1) / (2 * math.sqrt(math.pi)), abs=1e-11)
    assert so.gaussian_green(2.0, 1.0) == pytest.approx(math.exp(-1) / (2 * math.sqrt(math.pi)), rel=1e-15)


def test_origin_value():
    assert so.reduced_green(0.5, 0.0).value == pytest.approx(1 / (2 * math.gamma(0.75)), abs=1e-15)


def test_symmetry_and_tags():
    a, b = so.green(0.6, 1.2, 0.7), so.green(0.6, -1.2, 0.7)
    assert a.value == b.value
    assert a.method == "series" and a.abs_error_estimate >= 0.0
    with pytest.raises(ValueError):
        so.GreenEvaluation(0.0, 1.0, 0.0, "guess", 0.0)


def test_large_x_policy():
    with pytest.raises(PrecisionLoss):
        so.reduced_green(0.5, 30.0)
    v = so.reduced_green(0.5, 30.0, large_x="integral")
    assert v.method == "integral"
    # the contract is absolute: M_{1/4}(30) is ~1e-20
    mp.mp.dps = 80
    nu = mp.mpf("0.25")
    ref = mp.fsum((-30) ** k / mp.factorial(k) * mp.rgamma(1 - nu - nu * k) for k in range(600)) / 2
    assert abs(v.value - float(ref)) < 1e-12
    assert so.reduced_green(0.5, 5.0, large_x="integral").value == pytest.approx(
        so.reduced_green(0.5, 5.0).value, abs=1e-12)


def test_domain():
    with pytest.raises(DomainError):
        so.green(0.5, 1.0, 0.0)
    with pytest.raises(DomainError):
        so.green(1.2, 1.0, 1.0)
    with pytest.raises(DomainError):
        so.second_moment(0.0, 1.0)


@pytest.mark.parametrize("beta", [0.25, 0.5, 0.75, 1.0])
def test_moments(beta):
    m0, err = so.reduced_moment(beta, 0)
    assert m0 == pytest.approx(1.0, abs=1e-9) and err < 1e-8
    assert so.reduced_moment(beta, 1) == (0.0, 0.0)
    for t in (0.5, 2.0):
        assert so.spatial_moment(beta, t, 2) == pytest.approx(2 * t**beta / gamma(beta + 1), rel=1e-8)


def test_second_moment_closed_form():
    assert so.second_moment(0.5, 1.0) == pytest.approx(4 / math.sqrt(math.pi), rel=1e-15)
    assert so.second_moment(1.0, 3.0) == pytest.approx(6.0, rel=1e-15)


@settings(max_examples=40, deadline=None)
@given(beta=st.floats(0.1, 1.0), X=st.floats(0.0, 3.0), t=st.floats(0.05, 20.0))
def test_self_similarity(beta, X, t):
    s = t ** (beta / 2)
    lhs = so.green(beta, X * s, t).value * s
    assert lhs == pytest.approx(so.reduced_green(beta, X).value, abs=1e-10)


@settings(max_examples=30, deadline=None)
@given(beta=st.floats(0.1, 1.0), x=st.floats(0.0, 6.0))
def test_positive_and_decreasing(beta, x):
    u1 = so.green(beta, x, 1.0, large_x="integral").value
    u2 = so.green(beta, x + 0.25, 1.0, large_x="integral").value
    assert u1 > 0.0 and u2 < u1
