"""Independent brute-force evaluators used to cross-check the series solutions.

* :func:`fourier_cosine_U` - reduced Green function as the cosine transform
  of the Mittag-Leffler function.
* :func:`mellin_barnes_U` - the same function as a Mellin-Barnes integral,
  computed by the trapezoidal rule on a vertical line.
* :func:`double_inversion_u` - distributed-order Green function by numerical
  Fourier inversion of the numerically Laplace-inverted transform.
* :func:`inverse_laplace_ray` - Laplace inversion along the negative real
  axis for transforms with a branch cut there.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from typing import Callable, Mapping, Sequence

import numpy as np
from scipy.special import loggamma

from . import distributed_order as do
from .errors import DomainError, QuadratureError
from .quadrature import cosine_transform, log_ray_integral
from .specfun import mittag_leffler_neg, rgamma

__all__ = [
    "ContourSpec",
    "double_inversion_u",
    "fourier_cosine_U",
    "inverse_laplace_ray",
    "mellin_barnes_U",
]


@dataclass(frozen=True)
class ContourSpec:
    """Vertical line ``Re s = sigma`` truncated at ``|Im s| <= half_height``.

    ``nodes`` trapezoidal nodes cover ``[0, half_height]``.  A line with
    ``1 < sigma < 2`` lies right of the first pole of ``Gamma(1 - s)``; its
    residue is then added explicitly, which also makes ``x = 0`` reachable.
    """

    sigma: float = 0.5
    half_height: float = 30.0
    nodes: int = 512

    def __post_init__(self) -> None:
        if not (0.0 < self.sigma < 1.0 or 1.0 < self.sigma < 2.0):
            raise DomainError(f"sigma must lie in (0, 1) or (1, 2), got {self.sigma!r}")
        if not self.half_height > 0.0:
            raise DomainError("half_height must be positive")
        if self.nodes < 64:
            raise DomainError("at least 64 nodes are required")


def fourier_cosine_U(beta: float, x: float, tol: float = 1e-9) -> float:
    r"""Reduced Green function :math:`U(x) = \frac1\pi\int_0^\infty \cos(\kappa x)\,E_\beta(-\kappa^2)\,d\kappa`."""
    if not 0.0 < beta <= 1.0:
        raise DomainError(f"beta must lie in (0, 1], got {beta!r}")
    x = abs(x)
    ml_tol = 1e-3 * tol

    # the x = 0 fold multiplies errors at large k by k^2
    def f(k: float) -> float:
        return mittag_leffler_neg(beta, k * k, ml_tol / max(1.0, k * k)).value

    val, err = cosine_transform(f, x, math.pi * tol, what=f"fourier_cosine_U(beta={beta}, x={x})")
    return val / math.pi


def _mb_integrand(beta: float, log_x: float, s: complex) -> complex:
    return cmath.exp(complex(loggamma(1.0 - s)) - complex(loggamma(1.0 - 0.5 * beta * s)) + s * log_x)


def mellin_barnes_U(beta: float, x: float, contour: ContourSpec = ContourSpec(), tol: float = 1e-10) -> float:
    r"""Reduced Green function from its Mellin-Barnes integral

    .. math::

        U(x) = \frac{1}{2x}\,\frac{1}{2\pi i}\int_{\sigma-i\infty}^{\sigma+i\infty}
               \frac{\Gamma(1-s)}{\Gamma(1-\beta s/2)}\,x^s\,ds .

    The integrand at ``conj(s)`` is the conjugate, so only the upper half of
    the line is summed.  The height is doubled (keeping the node spacing)
    until the outermost segment contributes below ``tol / 10``.
    """
    if not 0.0 < beta <= 1.0:
        raise DomainError(f"beta must lie in (0, 1], got {beta!r}")
    if x < 0.0:
        raise DomainError(f"x must be non-negative, got {x!r}")
    sigma = contour.sigma
    residue = 0.0
    if sigma > 1.0:
        residue = 0.5 * rgamma(1.0 - 0.5 * beta)
        if x == 0.0:
            return residue
    elif x == 0.0:
        raise DomainError("the Mellin-Barnes form is singular at x = 0 for 0 < sigma < 1")

    log_x = math.log(x)
    h = contour.half_height / contour.nodes
    H = contour.half_height
    pref = 1.0 / (2.0 * x) / math.pi  # (1/2x)(1/2pi) * 2 Re(...) over the upper half line

    def segment(y0: float, y1: float, include_start: bool) -> float:
        ys = np.arange(y0 if include_start else y0 + h, y1 + 0.5 * h, h)
        vals = np.array([_mb_integrand(beta, log_x, complex(sigma, y)).real for y in ys])
        w = np.ones_like(vals)
        if include_start and y0 == 0.0:
            w[0] = 0.5
        return float(h * np.dot(w, vals))

    total = segment(0.0, H, True)
    for _ in range(12):
        extra = segment(H, 2.0 * H, False)
        total += extra
        H *= 2.0
        if abs(pref * extra) < 0.1 * tol:
            break
    else:
        raise QuadratureError(f"mellin_barnes_U(beta={beta}, x={x}): line integral does not decay")
    return pref * total + residue


def double_inversion_u(density: do.OrderDensity, x: float, t: float, tol: float = 1e-6) -> float:
    r"""Distributed-order Green function by nested quadrature,

    .. math::

        u(x,t) = \frac1\pi\int_0^\infty \cos(\kappa x)
                 \Big\{\int_0^\infty \frac{e^{-rt}}{r}K(\kappa,r)\,dr\Big\}d\kappa .

    Each outer node costs one ray quadrature; expect seconds per point at
    ``tol = 1e-6``.
    """
    if not t > 0.0:
        raise DomainError(f"t must be positive, got {t!r}")
    inner_tol = 1e-3 * tol

    def f(k: float) -> float:
        return do.fourier_hat(density, k, t, inner_tol / max(1.0, k * k))

    try:
        val, _ = cosine_transform(f, abs(x), math.pi * tol, what="outer Fourier inversion")
    except QuadratureError as exc:
        raise QuadratureError(f"double_inversion_u(x={x}, t={t}): {exc}") from exc
    return val / math.pi


def inverse_laplace_ray(
    F: Callable[[complex], complex],
    t: float,
    tol: float = 1e-10,
    subtract: int = 0,
    origin_terms: Sequence[float] = (),
    poles: Mapping[float, float] | None = None,
) -> float:
    r"""Inverse Laplace transform by integration along the branch cut,

    .. math::

        f(t) = -\frac1\pi\int_0^\infty \operatorname{Im}F(re^{i\pi})
               \Big[e^{-rt} - \sum_{j<m}\frac{(-rt)^j}{j!}\Big]dr
               + \sum_j c_j\frac{t^j}{j!} + \sum_p \operatorname{res}_p e^{pt}.

    ``F`` is evaluated on the upper lip of the cut, ``s = -r + 0i``.  The
    ``m = subtract`` Taylor terms of the exponential regularize transforms
    that grow like ``s^{-a}``, ``a < m + 1``, at the origin.  Isolated
    singularities are not seen by the cut integral and must be supplied:
    ``origin_terms`` are the coefficients ``c_j`` of ``c_j / s^{j+1}`` (to
    be removed from ``F``), and ``poles`` maps simple poles ``p < 0`` to
    their residues.
    """
    if not t > 0.0:
        raise DomainError(f"t must be positive, got {t!r}")
    m = int(subtract)

    def g(L: float) -> float:
        if L > 700.0 or L < -700.0:
            return 0.0
        r = math.exp(L)
        imf = complex(F(complex(-r, 0.0))).imag
        if not math.isfinite(imf):
            raise QuadratureError(f"inverse_laplace_ray: F is not finite at s = {-r:.6g}")
        if imf == 0.0:
            return 0.0
        rt = r * t
        if m == 0:
            kern = math.exp(-rt)
        elif m == 1:
            kern = math.expm1(-rt)
        else:
            kern = math.exp(-rt) - math.fsum((-rt) ** j / math.factorial(j) for j in range(m))
        return imf * kern * r

    lt = math.log(1.0 / t)
    val, _ = log_ray_integral(g, lt - 6.0, lt + 6.0, math.pi * tol, points=(lt,), what="inverse_laplace_ray")
    f = -val / math.pi
    f += math.fsum(c * t**j / math.factorial(j) for j, c in enumerate(origin_terms))
    if poles:
        f += math.fsum(res * math.exp(p * t) for p, res in poles.items())
    return f
