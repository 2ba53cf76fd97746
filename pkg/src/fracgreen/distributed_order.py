"""Time-fractional diffusion of distributed order.

The equation

    int_0^1 b(beta) D_*^beta u dbeta = u_xx,   u(x, 0+) = delta(x),

is solved through the branch-cut data of ``B(s) = int b(beta) s^beta dbeta``
on the negative real axis, ``B(r e^{i pi}) = rho(r) e^{i pi gamma(r)}``.
Every quantity below is a real integral over that ray, computed in the
variable ``L = log r`` with :func:`fracgreen.quadrature.log_ray_integral`.
"""

from __future__ import annotations

import cmath
import math
import threading
from dataclasses import dataclass, field
from typing import Callable, Optional, Sequence

import numpy as np
from scipy.integrate import quad
from scipy.special import gamma as gamma_fn
from scipy.special import gammaln

from .errors import DegenerateDensity, DomainError, PrecisionLoss, QuadratureError
from .quadrature import breakpoints_where, log_ray_integral
from .single_order import GreenEvaluation
from .specfun import sinpi

__all__ = [
    "Asymptote",
    "BranchCutPoint",
    "DensitySpecError",
    "MomentCurve",
    "OrderDensity",
    "asymptotic_laws",
    "b_transform",
    "branch_cut",
    "collapse_discrepancy",
    "f_closed",
    "f_series",
    "fit_asymptote",
    "fourier_hat",
    "green",
    "green_ray",
    "green_series",
    "kernel_K",
    "moment_curve",
    "parse_density",
    "phi_k",
    "single",
    "two_atoms",
    "uniform",
]

_EPS = 2.220446049250313e-16
MAX_SERIES_TERMS = 300


class DensitySpecError(DomainError):
    """A density specification string or order density is invalid."""


@dataclass(frozen=True)
class OrderDensity:
    """Order density ``b(beta)`` on ``[0, 1]``: point masses plus a continuous part.

    ``continuous_transform``, when given, must return
    ``int_0^1 c(beta) e^{beta z} dbeta`` for complex ``z = log s``; it
    replaces the numerical quadrature of the continuous part.
    """

    atoms: tuple[tuple[float, float], ...] = ()
    continuous: Optional[Callable[[float], float]] = None
    continuous_transform: Optional[Callable[[complex], complex]] = None
    smoothness: str = "bounded, piecewise continuous"
    label: str = ""
    _mass: float = field(default=0.0, repr=False, compare=False)

    def __post_init__(self) -> None:
        atoms = tuple((float(b), float(w)) for b, w in self.atoms)
        object.__setattr__(self, "atoms", atoms)
        for b, w in atoms:
            if not 0.0 < b <= 1.0:
                raise DensitySpecError(f"atom location {b!r} outside (0, 1]")
            if not w > 0.0:
                raise DensitySpecError(f"atom weight {w!r} must be positive")
        locs = [b for b, _ in atoms]
        if any(b2 <= b1 for b1, b2 in zip(locs, locs[1:])):
            raise DensitySpecError("atom locations must be strictly increasing")
        if not atoms and self.continuous is None:
            raise DensitySpecError("order density is empty")
        mass = math.fsum(w for _, w in atoms)
        if self.continuous is not None:
            cm, _ = quad(self.continuous, 0.0, 1.0, epsabs=1e-14, epsrel=1e-13, limit=200)
            mass += cm
        if abs(mass - 1.0) > 1e-12:
            raise DensitySpecError(
                f"order density has total mass {mass:.15g}; b(beta) must integrate to 1 "
                "over [0, 1] (normalization of the distributed-order equation)"
            )
        object.__setattr__(self, "_mass", mass)

    @property
    def beta_min(self) -> float:
        return 0.0 if self.continuous is not None else self.atoms[0][0]

    @property
    def beta_max(self) -> float:
        return 1.0 if self.continuous is not None else self.atoms[-1][0]

    def __str__(self) -> str:
        return self.label or repr(self)


def single(nu: float) -> OrderDensity:
    """``b(beta) = delta(beta - nu)``."""
    return OrderDensity(atoms=((nu, 1.0),), label=f"single:{nu:g}")


def two_atoms(beta1: float, b1: float, beta2: float, b2: float) -> OrderDensity:
    """``b1 delta(beta - beta1) + b2 delta(beta - beta2)`` with ``beta1 < beta2``."""
    return OrderDensity(
        atoms=((beta1, b1), (beta2, b2)),
        label=f"atoms:{beta1:g}={b1:g},{beta2:g}={b2:g}",
    )


def _uniform_transform(z: complex) -> complex:
    # int_0^1 e^{beta z} dbeta = (e^z - 1)/z
    if abs(z) < 1e-4:
        return 1.0 + z / 2.0 + z * z / 6.0 + z**3 / 24.0
    if z.real < -700.0:
        return -1.0 / z
    return (cmath.exp(z) - 1.0) / z


def uniform() -> OrderDensity:
    """``b(beta) = 1`` on ``[0, 1]``."""
    return OrderDensity(
        continuous=lambda beta: 1.0,
        continuous_transform=_uniform_transform,
        smoothness="constant",
        label="uniform",
    )


def parse_density(spec: str) -> OrderDensity:
    """Parse ``single:NU``, ``atoms:B1=W1,B2=W2,...``, ``two-atoms:B1,W1,B2,W2`` or ``uniform``."""
    spec = spec.strip()
    kind, _, rest = spec.partition(":")
    kind = kind.strip().lower()

    def number(tok: str) -> float:
        try:
            return float(tok)
        except ValueError:
            raise DensitySpecError(f"cannot parse number {tok!r} in density spec {spec!r}") from None

    if kind == "uniform" and not rest:
        return uniform()
    if kind == "single":
        return single(number(rest))
    if kind == "atoms":
        atoms = []
        for item in filter(None, (s.strip() for s in rest.split(","))):
            loc, eq, w = item.partition("=")
            if not eq:
                raise DensitySpecError(f"atom {item!r} is not of the form BETA=WEIGHT")
            atoms.append((number(loc), number(w)))
        if not atoms:
            raise DensitySpecError(f"no atoms in density spec {spec!r}")
        atoms.sort()
        return OrderDensity(atoms=tuple(atoms), label=spec)
    if kind == "two-atoms":
        vals = [number(tok) for tok in rest.split(",")]
        if len(vals) != 4:
            raise DensitySpecError(f"two-atoms needs 4 numbers, got {rest!r}")
        return two_atoms(*vals)
    raise DensitySpecError(f"unknown density kind {kind!r} in {spec!r}")


# --- B(s) and branch-cut data -------------------------------------------------


def _continuous_part(density: OrderDensity, z: complex) -> complex:
    if density.continuous is None:
        return 0.0j
    if density.continuous_transform is not None:
        return complex(density.continuous_transform(z))
    c = density.continuous
    scale = abs(z.real)
    pts = [p / scale for p in (1.0, 10.0, 40.0) if scale > p] if scale > 1.0 else None
    val, err = quad(lambda b: c(b) * cmath.exp(b * z), 0.0, 1.0, complex_func=True,
                    epsabs=1e-13, epsrel=1e-12, limit=200, points=pts)[:2]
    if abs(err) > 1e-10 * max(1.0, abs(val)):
        raise QuadratureError(f"continuous part of B did not converge at log s = {z}")
    return val


def b_transform(density: OrderDensity, s: complex) -> complex:
    """``B(s) = int_0^1 b(beta) s^beta dbeta`` on the principal branch."""
    s = complex(s)
    if s == 0:
        raise DomainError("B(s) is not defined at s = 0")
    z = cmath.log(s)
    total = sum(w * cmath.exp(b * z) for b, w in density.atoms)
    return complex(total) + _continuous_part(density, z)


def _b_on_ray(density: OrderDensity, L: float) -> complex:
    """``B(e^L e^{i pi})``; atoms use exact trigonometry so ``beta = 1`` stays real."""
    re = im = 0.0
    for b, w in density.atoms:
        m = w * math.exp(b * L)
        re += m * math.cos(math.pi * b) if b != 0.5 else 0.0
        im += m * sinpi(b)
    return complex(re, im) + _continuous_part(density, complex(L, math.pi))


@dataclass(frozen=True)
class BranchCutPoint:
    """Polar form ``rho e^{i pi gamma}`` of ``B`` at ``s = r e^{i pi}``."""

    r: float
    rho: float
    gamma: float


def _rho_gamma(density: OrderDensity, L: float) -> tuple[float, float, complex]:
    B = _b_on_ray(density, L)
    if density.continuous is None and len(density.atoms) == 1:
        # one atom: the argument is exactly its order
        b, w = density.atoms[0]
        return w * math.exp(b * L), b, B
    rho = abs(B)
    if rho == 0.0:
        return 0.0, 0.0, B
    gam = math.atan2(B.imag, B.real) / math.pi
    if not 0.0 < gam <= 1.0:
        raise DegenerateDensity(
            f"arg B(r e^(i pi))/pi = {gam:.6g} at r = e^{L:.6g}; order density is not admissible"
        )
    return rho, gam, B


def branch_cut(density: OrderDensity, r: float) -> BranchCutPoint:
    """Modulus ``rho`` and normalized argument ``gamma`` of ``B(r e^{i pi})``."""
    if not r > 0.0:
        raise DomainError(f"r must be positive, got {r!r}")
    rho, gam, _ = _rho_gamma(density, math.log(r))
    if density.continuous is None and len(density.atoms) == 1:
        rho = density.atoms[0][1] * r ** density.atoms[0][0]
    if rho == 0.0:
        raise DegenerateDensity(f"B vanishes at r = {r!r}")
    return BranchCutPoint(float(r), rho, gam)


def kernel_K(density: OrderDensity, kappa: float, r: float) -> float:
    """Spectral kernel ``K(kappa, r)`` of the Fourier transform of the solution."""
    if not r > 0.0:
        raise DomainError(f"r must be positive, got {r!r}")
    return _kernel_at(density, kappa, math.log(r))


def _kernel_at(density: OrderDensity, kappa: float, L: float) -> float:
    if kappa == 0.0:
        return 0.0
    rho, gam, B = _rho_gamma(density, L)
    if rho == 0.0 or B.imag == 0.0:
        # gamma = 1: K vanishes off the pole at rho = kappa^2
        return 0.0
    k2 = kappa * kappa
    # kappa^4 + 2 kappa^2 rho cos(pi gamma) + rho^2 = |kappa^2 + B|^2
    den = (k2 + B.real) ** 2 + B.imag**2
    return k2 * B.imag / den / math.pi


def _is_classical(density: OrderDensity) -> bool:
    return density.continuous is None and density.atoms == ((1.0, 1.0),)


# --- integrals over the ray ---------------------------------------------------


def _core_interval(t: float, extra: Sequence[float] = ()) -> tuple[float, float]:
    lt = math.log(1.0 / t)
    pts = [lt, 0.0, *extra]
    return min(pts) - 4.0, max(pts) + 4.0


def _phi_integrand(density: OrderDensity, k: int, t: float):
    half = 0.5 * (k + 1)

    def g(L: float) -> float:
        if L > 700.0:
            return 0.0
        rho, gam, _ = _rho_gamma(density, L)
        if rho == 0.0:
            return 0.0
        log_mag = half * math.log(rho) - math.exp(L) * t
        if log_mag < -745.0:
            return 0.0
        return sinpi(gam * half) * math.exp(log_mag)

    return g


_PHI_CACHE: dict = {}
_PHI_LOCK = threading.Lock()


def _phi(density: OrderDensity, k: int, t: float, tol: float) -> tuple[float, float]:
    key = (density, float(t), int(k))
    hit = _PHI_CACHE.get(key)
    if hit is not None and hit[2] <= tol:
        return hit[0], hit[1]
    # peak of e^{-rt} rho^{(k+1)/2}: r ~ (k+1) beta_max / (2t)
    peak = math.log(max(1.0, 0.5 * (k + 1) * density.beta_max) / t)
    lo, hi = _core_interval(t, (peak,))
    val, err = log_ray_integral(
        _phi_integrand(density, k, t), lo, hi, tol, points=(peak, math.log(1.0 / t)),
        what=f"phi_{k}(t={t})",
    )
    with _PHI_LOCK:
        _PHI_CACHE[key] = (val, err, tol)
    return val, err


def phi_k(density: OrderDensity, k: int, t: float, tol: float = 1e-10) -> float:
    r"""Time-scale function

    .. math::

        \varphi_k(t) = \int_0^\infty \frac{e^{-rt}}{r}
            \sin\!\big[\pi\gamma(r)(k+1)/2\big]\,\rho(r)^{(k+1)/2}\,dr .

    Values are cached per ``(density, t, k)``.
    """
    if not t > 0.0:
        raise DomainError(f"t must be positive, got {t!r}")
    if k < 0 or int(k) != k:
        raise DomainError(f"k must be a non-negative integer, got {k!r}")
    return _phi(density, int(k), float(t), tol)[0]


def clear_cache() -> None:
    """Drop all cached ``phi_k`` values."""
    with _PHI_LOCK:
        _PHI_CACHE.clear()


def f_series(gam: float, z: float, form: str = "sine", tol: float = 1e-14) -> float:
    r"""Power series of the Mellin-Barnes function ``F(z)``.

    ``form="gamma"`` sums
    :math:`\pi z\sum_k (-z)^k / (k!\,\Gamma(\gamma(k+1)/2)\,\Gamma(1-\gamma(k+1)/2))`,
    ``form="sine"`` sums :math:`z\sum_k (-z)^k \sin(\pi\gamma(k+1)/2)/k!`.
    """
    from .specfun import rgamma

    terms = []
    for k in range(MAX_SERIES_TERMS):
        a = 0.5 * gam * (k + 1)
        log_mag = k * math.log(z) - float(gammaln(k + 1.0)) if z > 0.0 else (0.0 if k == 0 else -math.inf)
        if log_mag == -math.inf:
            break
        mag = math.exp(log_mag) * (-1.0 if k % 2 else 1.0)
        if form == "gamma":
            terms.append(math.pi * mag * rgamma(a) * rgamma(1.0 - a))
        else:
            terms.append(mag * sinpi(a))
        if k > z and math.exp(log_mag) < tol * 1e-3:
            break
    return z * math.fsum(terms)


def f_closed(gam: float, z: float) -> float:
    """Closed form ``z e^{-z cos(theta)} sin(theta - z sin(theta))``, ``theta = pi gamma / 2``."""
    th = 0.5 * math.pi * gam
    return z * math.exp(-z * math.cos(th)) * math.sin(th - z * math.sin(th))


def green_series(density: OrderDensity, x: float, t: float, tol: float = 1e-10) -> GreenEvaluation:
    r"""Series solution :math:`u(x,t) = \frac{1}{2\pi}\sum_k \frac{(-|x|)^k}{k!}\varphi_k(t)`.

    Raises :class:`PrecisionLoss` when cancellation between terms, amplified
    by the quadrature error of the ``phi_k``, exceeds ``tol``.
    """
    if not t > 0.0:
        raise DomainError(f"t must be positive, got {t!r}")
    ax = abs(x)
    terms: list[float] = []
    err = 0.0
    small = 0
    phi_tol = min(1e-10, tol)
    for k in range(MAX_SERIES_TERMS):
        if ax == 0.0 and k > 0:
            break
        phi, phi_err = _phi(density, k, t, phi_tol)
        c = math.exp(k * math.log(ax) - float(gammaln(k + 1.0))) if k else 1.0
        term = (-1.0 if k % 2 else 1.0) * c * phi
        terms.append(term)
        err += c * phi_err + abs(term) * 4 * _EPS
        if err > 2.0 * math.pi * tol:
            raise PrecisionLoss(
                f"green_series(x={x}, t={t}): accumulated error {err / (2 * math.pi):.3g} "
                f"exceeds tol={tol:.3g}"
            )
        small = small + 1 if abs(term) < 0.05 * tol and k > ax else 0
        if small >= 3:
            break
    else:
        raise PrecisionLoss(f"green_series(x={x}, t={t}): no convergence in {MAX_SERIES_TERMS} terms")
    value = math.fsum(terms) / (2.0 * math.pi)
    tail = 3 * 0.05 * tol if ax > 0 else 0.0
    return GreenEvaluation(float(x), float(t), value, "series", err / (2.0 * math.pi) + tail)


def green_ray(density: OrderDensity, x: float, t: float, tol: float = 1e-10) -> GreenEvaluation:
    r"""Green function as a single real integral over the ray.

    Summing the series of ``F`` in closed form gives

    .. math::

        u(x,t) = \frac{1}{2\pi}\int_0^\infty \frac{e^{-rt}}{r}\,\rho^{1/2}
            e^{-\rho^{1/2}|x|\cos\theta}\sin(\theta - \rho^{1/2}|x|\sin\theta)\,dr,
        \qquad \theta = \pi\gamma/2,

    which carries no series cancellation and serves large ``|x|``.
    """
    if not t > 0.0:
        raise DomainError(f"t must be positive, got {t!r}")
    ax = abs(x)

    def g(L: float) -> float:
        if L > 700.0:
            return 0.0
        rho, gam, _ = _rho_gamma(density, L)
        if rho == 0.0:
            return 0.0
        sq = math.sqrt(rho)
        th = 0.5 * math.pi * gam
        log_mag = 0.5 * math.log(rho) - math.exp(L) * t - sq * ax * math.cos(th)
        if log_mag < -745.0:
            return 0.0
        return math.exp(log_mag) * math.sin(th - sq * ax * math.sin(th))

    extra = []
    if ax > 0.0:
        # where rho^{1/2}|x| ~ 1 the oscillation starts
        extra = breakpoints_where(lambda L: _rho_gamma(density, L)[0] * ax * ax, 1.0, -60.0, 40.0)
    lo, hi = _core_interval(t, extra)
    val, err = log_ray_integral(g, lo, hi, 2.0 * math.pi * tol, points=extra, what=f"u(x={x}, t={t})")
    return GreenEvaluation(float(x), float(t), val / (2.0 * math.pi), "ray_integral", err / (2.0 * math.pi))


def green(density: OrderDensity, x: float, t: float, tol: float = 1e-10, method: str = "auto") -> GreenEvaluation:
    """Green function; ``method`` is ``"series"``, ``"ray"`` or ``"auto"``.

    ``"auto"`` uses the series and falls back to the ray integral on
    :class:`PrecisionLoss`.
    """
    if method == "series":
        return green_series(density, x, t, tol)
    if method == "ray":
        return green_ray(density, x, t, tol)
    if method != "auto":
        raise ValueError(f"unknown method {method!r}")
    try:
        return green_series(density, x, t, tol)
    except PrecisionLoss:
        return green_ray(density, x, t, tol)


def fourier_hat(density: OrderDensity, kappa: float, t: float, tol: float = 1e-10) -> float:
    r"""Spatial characteristic function
    :math:`\hat u(\kappa,t) = \int_0^\infty e^{-rt} K(\kappa,r)\,dr/r`.

    ``kappa = 0`` returns the limit 1 (total probability).
    """
    if not t > 0.0:
        raise DomainError(f"t must be positive, got {t!r}")
    kappa = abs(kappa)
    if kappa == 0.0:
        return 1.0
    if _is_classical(density):
        # pure pole at s = -kappa^2, no branch cut
        return math.exp(-kappa * kappa * t)

    def g(L: float) -> float:
        if L > 700.0:
            return 0.0
        e = math.exp(L) * t
        if e > 745.0:
            return 0.0
        return math.exp(-e) * _kernel_at(density, kappa, L)

    # K peaks where rho(r) ~ kappa^2
    peaks = breakpoints_where(lambda L: _rho_gamma(density, L)[0], kappa * kappa, -200.0, 60.0, n=261)
    lo, hi = _core_interval(t, peaks)
    val, _ = log_ray_integral(g, lo, hi, tol, points=peaks, what=f"u_hat(kappa={kappa}, t={t})")
    return val


# --- second moment ------------------------------------------------------------


@dataclass(frozen=True)
class Asymptote:
    """Asymptotic law of the variance.

    ``kind == "power"``: ``mu2 ~ prefactor * t**exponent``.
    ``kind == "log"``: ``mu2 ~ prefactor * log(t)`` for large ``t`` and
    ``mu2 ~ prefactor * t * log(1/t)`` for small ``t``.
    """

    kind: str
    exponent: float
    prefactor: float
    residual: float = 0.0


@dataclass(frozen=True)
class MomentCurve:
    t_grid: np.ndarray
    mu2: np.ndarray
    method: str
    asymptote_small_t: Optional[Asymptote] = None
    asymptote_large_t: Optional[Asymptote] = None


def asymptotic_laws(density: OrderDensity) -> tuple[Optional[Asymptote], Optional[Asymptote]]:
    """Small-``t`` and large-``t`` variance laws known for the density class."""
    if density.continuous is None:
        (b_lo, w_lo), (b_hi, w_hi) = density.atoms[0], density.atoms[-1]
        small = Asymptote("power", b_hi, 2.0 / (w_hi * gamma_fn(b_hi + 1.0)))
        large = Asymptote("power", b_lo, 2.0 / (w_lo * gamma_fn(b_lo + 1.0)))
        return small, large
    if not density.atoms and density.label == "uniform":
        return Asymptote("log", 1.0, 2.0), Asymptote("log", 0.0, 2.0)
    return None, None


def _mu2(density: OrderDensity, t: float, tol: float) -> float:
    if _is_classical(density):
        # 2/s^2 is a double pole at the origin
        return 2.0 * t
    def g(L: float) -> float:
        rho, _, B = _rho_gamma(density, L)
        if rho == 0.0:
            return 0.0
        r = math.exp(L) if L < 700.0 else math.inf
        # (1 - e^{-rt}) Im(-1/B)... = (1 - e^{-rt}) sin(pi gamma) / rho
        return -math.expm1(-r * t) * (B.imag / rho) / rho

    lo, hi = _core_interval(t)
    val, _ = log_ray_integral(g, lo, hi, tol * math.pi / 2.0, points=(math.log(1.0 / t),),
                              what=f"mu2(t={t})")
    return 2.0 / math.pi * val


def moment_curve(density: OrderDensity, t_grid: Sequence[float], tol: float = 1e-10) -> MomentCurve:
    r"""Variance ``mu2(t)`` by inverting ``2 / (s B(s))`` along the branch cut.

    With one subtraction of the exponential kernel,

    .. math::

        \mu_2(t) = \frac{2}{\pi}\int_0^\infty \frac{1-e^{-rt}}{r}
                   \frac{\sin\pi\gamma(r)}{\rho(r)}\,dr .
    """
    t = np.asarray(t_grid, dtype=float)
    if t.ndim != 1 or t.size == 0 or np.any(t <= 0.0):
        raise DomainError("t_grid must be a non-empty array of positive times")
    if np.any(np.diff(t) <= 0.0):
        raise DomainError("t_grid must be increasing")
    mu = np.array([_mu2(density, float(ti), tol) for ti in t])
    small, large = asymptotic_laws(density)
    return MomentCurve(t, mu, "laplace_inversion", small, large)


def fit_asymptote(t: np.ndarray, mu2: np.ndarray, kind: str = "power", regime: str = "large") -> Asymptote:
    """Least-squares fit of a variance law on the supplied samples.

    ``kind="power"`` fits ``log mu2 = log A + a log t``.  ``kind="log"`` fits
    ``mu2 = A log t + C`` (``regime="large"``) or ``mu2 / t = A log(1/t) + C``
    (``regime="small"``).
    """
    t = np.asarray(t, dtype=float)
    mu2 = np.asarray(mu2, dtype=float)
    if kind == "power":
        A = np.vstack([np.ones_like(t), np.log(t)]).T
        coef, res, *_ = np.linalg.lstsq(A, np.log(mu2), rcond=None)
        resid = float(np.sqrt(res[0] / t.size)) if res.size else 0.0
        return Asymptote("power", float(coef[1]), float(math.exp(coef[0])), resid)
    if kind == "log":
        if regime == "large":
            X, y, expo = np.log(t), mu2, 0.0
        else:
            X, y, expo = np.log(1.0 / t), mu2 / t, 1.0
        A = np.vstack([X, np.ones_like(X)]).T
        coef, res, *_ = np.linalg.lstsq(A, y, rcond=None)
        resid = float(np.sqrt(res[0] / t.size)) if res.size else 0.0
        return Asymptote("log", expo, float(coef[0]), resid)
    raise ValueError(f"unknown asymptote kind {kind!r}")


# --- self-similarity ---------------------------------------------------------


def collapse_discrepancy(
    density: OrderDensity,
    c: float,
    X_grid: Sequence[float],
    times: Sequence[float] = (0.5, 2.0),
    tol: float = 1e-11,
) -> float:
    """``max_X max_{t,t'} |t^c u(X t^c, t) - t'^c u(X t'^c, t')|``.

    Zero (up to rounding) iff ``u`` collapses under the scaling exponent ``c``.
    """
    curves = []
    for t in times:
        s = t**c
        curves.append(np.array([s * green(density, X * s, t, tol).value for X in X_grid]))
    worst = 0.0
    for i in range(len(curves)):
        for j in range(i + 1, len(curves)):
            worst = max(worst, float(np.max(np.abs(curves[i] - curves[j]))))
    return worst
