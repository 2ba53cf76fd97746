"""Fundamental solution of the single-order time-fractional diffusion equation.

For ``0 < beta <= 1`` the Green function is self-similar,

    u(x, t) = t^(-beta/2) U(|x| / t^(beta/2)),   U(x) = M_{beta/2}(x) / 2,

and its variance grows like ``2 t^beta / Gamma(beta + 1)``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from scipy.integrate import quad
from scipy.special import gamma

from . import specfun
from .errors import DomainError, PrecisionLoss, QuadratureError
from .specfun import SeriesValue

__all__ = [
    "GreenEvaluation",
    "METHODS",
    "gaussian_green",
    "green",
    "reduced_green",
    "reduced_moment",
    "second_moment",
    "spatial_moment",
]

#: Method tags carried by :class:`GreenEvaluation`.
METHODS = (
    "series",
    "integral",
    "ray_integral",
    "fourier_oracle",
    "mellin_barnes_oracle",
    "double_inversion_oracle",
)


@dataclass(frozen=True)
class GreenEvaluation:
    """One sample ``u(x, t)`` of a Green function."""

    x: float
    t: float
    value: float
    method: str
    abs_error_estimate: float

    def __post_init__(self) -> None:
        if self.method not in METHODS:
            raise ValueError(f"unknown method tag {self.method!r}")


def _check_beta(beta: float) -> None:
    if not 0.0 < beta <= 1.0:
        raise DomainError(f"beta must lie in (0, 1], got {beta!r}")


def _check_t(t: float) -> None:
    if not t > 0.0:
        raise DomainError(f"t must be positive (t = 0 is the delta initial condition), got {t!r}")


def reduced_green(beta: float, x: float, tol: float = 1e-12, large_x: str = "raise") -> SeriesValue:
    """Reduced Green function ``U(x) = M_{beta/2}(|x|) / 2``.

    ``large_x="integral"`` switches to the integral representation of the
    M-function when the series loses precision; the default propagates
    :class:`PrecisionLoss`.
    """
    _check_beta(beta)
    x = abs(x)
    try:
        m = specfun.wright_m(beta / 2.0, x, 2.0 * tol)
    except PrecisionLoss:
        if large_x != "integral":
            raise
        m = specfun.wright_m_integral(beta / 2.0, x, 2.0 * tol)
    return SeriesValue(0.5 * m.value, 0.5 * m.abs_error_estimate, m.terms_used, m.converged, m.method)


def green(beta: float, x: float, t: float, tol: float = 1e-12, large_x: str = "raise") -> GreenEvaluation:
    """``u(x, t) = t^(-beta/2) U(|x| t^(-beta/2))``."""
    _check_beta(beta)
    _check_t(t)
    scale = t ** (-beta / 2.0)
    # U is needed to tol / scale so that u meets tol
    u = reduced_green(beta, abs(x) * scale, tol / max(scale, 1.0), large_x=large_x)
    return GreenEvaluation(float(x), float(t), scale * u.value, u.method, scale * u.abs_error_estimate)


def gaussian_green(x: float, t: float) -> float:
    """Classical heat kernel for ``u_t = u_xx``."""
    _check_t(t)
    return math.exp(-x * x / (4.0 * t)) / (2.0 * math.sqrt(math.pi * t))


def second_moment(beta: float, t: float) -> float:
    """Closed-form variance ``2 t^beta / Gamma(beta + 1)``."""
    _check_beta(beta)
    _check_t(t)
    return 2.0 * t**beta / gamma(beta + 1.0)


def reduced_moment(beta: float, order: int, tol: float = 1e-10) -> tuple[float, float]:
    """``int_R X^order U(X) dX`` by adaptive quadrature over growing panels.

    Panels of unit length are added until one contributes less than
    ``1e-2 * tol``; the last contribution is reported as the tail bound.
    """
    _check_beta(beta)
    if order % 2:
        return 0.0, 0.0

    def f(X: float) -> float:
        return X**order * reduced_green(beta, X, 1e-13, large_x="integral").value

    total, err = 0.0, 0.0
    a = 0.0
    while True:
        val, e = quad(f, a, a + 1.0, epsabs=1e-3 * tol, epsrel=1e-12, limit=200)
        total += val
        err += e
        a += 1.0
        if abs(val) < 1e-2 * tol and a > 1.0:
            break
        if a > 500.0:
            raise QuadratureError("reduced moment: tail does not decay")
    return 2.0 * total, 2.0 * (err + abs(val))


def spatial_moment(beta: float, t: float, order: int, tol: float = 1e-10) -> float:
    """``int_R x^order u(x, t) dx`` by quadrature of the series solution.

    Uses the similarity law: the moment equals ``t^(order beta / 2)`` times
    the corresponding moment of ``U``.
    """
    _check_t(t)
    m, _ = reduced_moment(beta, order, tol)
    return t ** (order * beta / 2.0) * m
