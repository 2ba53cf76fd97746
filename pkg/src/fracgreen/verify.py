"""Self-check suite behind ``fracgreen verify``.

Every check compares a library result with an independent reference (a
closed form evaluated with :mod:`math`/:mod:`scipy`, a brute-force oracle, or
an identity) and records the residual against a fixed threshold.  A check
that raises is reported as an error, which is distinct from a failure.
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass
from typing import Callable, Iterator

import numpy as np
from scipy.special import erfcx, gamma

from . import distributed_order as do
from . import fraccalc as fc
from . import oracles, single_order, specfun

__all__ = ["CheckResult", "run_suite", "PROFILES"]

PROFILES = ("fast", "full")


@dataclass(frozen=True)
class CheckResult:
    check_name: str
    residual: float
    threshold: float
    passed: bool
    error: str | None = None
    seconds: float = 0.0

    def to_json(self) -> dict:
        d = {
            "check_name": self.check_name,
            "residual": self.residual,
            "threshold": self.threshold,
            "pass": self.passed,
        }
        if self.error is not None:
            d["error"] = self.error
        return d


# A check returns its residual; ``expect="above"`` inverts the comparison.
_Check = tuple[str, Callable[[], float], float, str]


def _max_abs(pairs) -> float:
    return max(abs(a - b) for a, b in pairs)


def _gauss(x: float, t: float) -> float:
    return math.exp(-x * x / (4.0 * t)) / (2.0 * math.sqrt(math.pi * t))


# --- special functions -------------------------------------------------------


def _special_checks() -> Iterator[_Check]:
    yield ("M_1/2(0) = 1/sqrt(pi)",
           lambda: abs(specfun.wright_m(0.5, 0.0).value - 1.0 / math.sqrt(math.pi)), 1e-12, "below")
    yield ("M_1/2(x) Gaussian profile",
           lambda: _max_abs((specfun.wright_m(0.5, x).value,
                             math.exp(-x * x / 4.0) / math.sqrt(math.pi)) for x in (0.5, 1.0, 2.0, 3.0)),
           1e-11, "below")
    yield ("M reciprocal vs reflection form",
           lambda: _max_abs((specfun.wright_m(nu, x).value, specfun.wright_m(nu, x, form="reflection").value)
                            for nu in (0.125, 0.25, 0.375) for x in (0.3, 1.0, 2.5)),
           1e-11, "below")
    yield ("M series vs integral representation",
           lambda: _max_abs((specfun.wright_m(0.25, x).value, specfun.wright_m_integral(0.25, x).value)
                            for x in (0.5, 1.5, 3.0)),
           1e-9, "below")
    # E_{1/2}(-z) = exp(z^2) erfc(z)
    yield ("E_1/2(-y) vs erfcx",
           lambda: _max_abs((specfun.mittag_leffler_neg(0.5, y).value, float(erfcx(y)))
                            for y in (0.25, 1.0, 4.0, 30.0, 400.0)),
           1e-11, "below")
    yield ("E_1(-y) = exp(-y)",
           lambda: _max_abs((specfun.mittag_leffler_neg(1.0, y).value, math.exp(-y)) for y in (0.1, 1.0, 10.0)),
           1e-12, "below")


# --- single order ------------------------------------------------------------


def _single_checks(full: bool) -> Iterator[_Check]:
    xs = np.round(np.arange(-4.0, 4.0 + 1e-9, 0.1), 10)
    yield ("Gaussian limit beta=1",
           lambda: _max_abs((single_order.green(1.0, x, t, 1e-11).value, _gauss(x, t))
                            for t in (0.5, 1.0, 2.0) for x in xs),
           1e-10, "below")
    betas = (0.25, 0.5, 0.75) if full else (0.5,)
    xg = (0.0, 0.5, 1.0, 2.0, 4.0) if full else (0.0, 1.0, 2.0)
    yield ("series vs cosine-transform oracle",
           lambda: _max_abs((single_order.reduced_green(b, x).value, oracles.fourier_cosine_U(b, x))
                            for b in betas for x in xg),
           1e-7, "below")
    mb = oracles.ContourSpec(sigma=1.5)
    yield ("series vs Mellin-Barnes oracle",
           lambda: _max_abs((single_order.reduced_green(b, x).value, oracles.mellin_barnes_U(b, x, mb))
                            for b in betas for x in xg),
           1e-7, "below")
    yield ("Mellin-Barnes contour independence",
           lambda: _max_abs((oracles.mellin_barnes_U(0.5, 1.0, oracles.ContourSpec(sigma=s)),
                             oracles.mellin_barnes_U(0.5, 1.0, oracles.ContourSpec(sigma=0.5)))
                            for s in (0.3, 0.7)),
           2e-10, "below")
    mbetas = (0.25, 0.5, 0.75) if full else (0.5,)
    yield ("normalization of U",
           lambda: max(abs(single_order.reduced_moment(b, 0)[0] - 1.0) for b in mbetas), 1e-6, "below")
    yield ("variance law 2 t^beta / Gamma(beta+1)",
           lambda: max(abs(single_order.spatial_moment(b, t, 2) / (2.0 * t**b / gamma(b + 1.0)) - 1.0)
                       for b in mbetas for t in (0.5, 1.0, 2.0)),
           1e-5, "below")
    yield ("self-similar scaling of u",
           lambda: _max_abs((single_order.green(0.5, 1.3 * t**0.25, t).value * t**0.25,
                             single_order.green(0.5, 1.3, 1.0).value) for t in (0.5, 2.0, 8.0)),
           1e-10, "below")


# --- distributed order -------------------------------------------------------


def _distributed_checks(full: bool) -> Iterator[_Check]:
    d5 = do.single(0.5)
    two = do.two_atoms(0.25, 0.5, 0.75, 0.5)

    def branch_reduction() -> float:
        worst = 0.0
        for nu in (0.25, 0.5, 0.75):
            for r in (1e-3, 0.5, 1.0, 7.0, 1e3):
                p = do.branch_cut(do.single(nu), r)
                worst = max(worst, abs(p.rho / r**nu - 1.0), abs(p.gamma - nu))
        return worst

    yield ("branch cut of a single order", branch_reduction, 1e-14, "below")

    def phi_reduction() -> float:
        worst = 0.0
        for nu in (0.25, 0.5, 0.75):
            for k in range(9):
                a = 0.5 * nu * (k + 1)
                ref = specfun.sinpi(a) * gamma(a)  # t = 1
                worst = max(worst, abs(do.phi_k(do.single(nu), k, 1.0) - ref))
        return worst

    yield ("phi_k of a single order", phi_reduction, 1e-8, "below")
    yield ("distributed series vs single-order closed form",
           lambda: _max_abs((do.green_series(d5, x, t).value, single_order.green(0.5, x, t).value)
                            for x in (0.0, 0.5, 1.0, 2.0) for t in (0.5, 1.0, 2.0)),
           1e-6, "below")
    yield ("fourier_hat of a single order vs erfcx",
           lambda: abs(do.fourier_hat(d5, 1.0, 1.0) - float(erfcx(1.0))), 1e-8, "below")
    yield ("B(1) = 1 for the uniform density",
           lambda: abs(do.b_transform(do.uniform(), 1.0) - 1.0), 1e-14, "below")
    yield ("two-atom series vs ray integral",
           lambda: _max_abs((do.green_series(two, x, 1.0).value, do.green_ray(two, x, 1.0).value)
                            for x in (0.0, 1.0, 3.0)),
           1e-8, "below")
    yield ("variance of a single order by ray inversion",
           lambda: max(abs(do.moment_curve(do.single(b), [1.0, 3.0]).mu2[i] / (2.0 * t**b / gamma(b + 1.0)) - 1.0)
                       for b in (0.25, 0.5, 0.75) for i, t in enumerate((1.0, 3.0))),
           1e-8, "below")
    yield ("self-similar collapse of a single order",
           lambda: do.collapse_discrepancy(d5, 0.25, np.linspace(0.0, 3.0, 7)), 1e-8, "below")
    yield ("no collapse for two atoms",
           lambda: min(do.collapse_discrepancy(two, c, np.linspace(0.0, 3.0, 7), tol=1e-9)
                       for c in np.linspace(0.05, 0.95, 19)),
           1e-3, "above")

    def uniform_log_slope() -> float:
        t = np.logspace(2.0, 3.0, 6)
        fit = do.fit_asymptote(t, do.moment_curve(do.uniform(), t).mu2, "log", "large")
        return abs(fit.prefactor / 2.0 - 1.0)

    yield ("uniform density: logarithmic growth rate", uniform_log_slope, 0.05, "below")

    points = [(x, t) for x in (0.0, 0.5, 1.0, 2.0) for t in (0.5, 1.0, 2.0)] if full else [(1.0, 1.0)]
    yield ("series vs double inversion (two atoms)",
           lambda: _max_abs((do.green_series(two, x, t).value, oracles.double_inversion_u(two, x, t))
                            for x, t in points),
           1e-5, "below")
    if full:
        yield ("normalization of distributed-order u",
               lambda: max(abs(_mass(d, t) - 1.0) for d in (two, do.uniform()) for t in (0.5, 1.0, 2.0)),
               1e-6, "below")
        yield from _slow_diffusion_checks(two)


def _mass(density: do.OrderDensity, t: float) -> float:
    from scipy.integrate import quad

    val, _ = quad(lambda x: do.green(density, x, t, 1e-10).value, 0.0, np.inf, epsabs=1e-9, limit=400)
    return 2.0 * val


def _slow_diffusion_checks(two: do.OrderDensity) -> Iterator[_Check]:
    small, large = do.asymptotic_laws(two)

    def fit(lo: float, hi: float) -> do.Asymptote:
        t = np.logspace(lo, hi, 11)
        return do.fit_asymptote(t, do.moment_curve(two, t).mu2, "power")

    yield ("two atoms: small-t slope", lambda: abs(fit(-3, -2).exponent / small.exponent - 1.0), 0.02, "below")
    yield ("two atoms: small-t prefactor", lambda: abs(fit(-3, -2).prefactor / small.prefactor - 1.0), 0.05, "below")
    yield ("two atoms: large-t slope", lambda: abs(fit(2, 3).exponent / large.exponent - 1.0), 0.02, "below")
    yield ("two atoms: large-t prefactor", lambda: abs(fit(2, 3).prefactor / large.prefactor - 1.0), 0.05, "below")

    def uniform_ratio(t: float) -> float:
        mu = oracles.inverse_laplace_ray(_uniform_mu2_transform, t, 1e-10, subtract=1)
        ref = 2.0 * math.log(t) if t > 1.0 else 2.0 * t * math.log(1.0 / t)
        return abs(mu / ref - 1.0)

    yield ("uniform: mu2 / (2 ln t) at t = 1e3", lambda: uniform_ratio(1e3), 0.05, "below")
    yield ("uniform: mu2 / (2 t ln(1/t)) at t = 1e-3", lambda: uniform_ratio(1e-3), 0.05, "below")


def _uniform_mu2_transform(s: complex) -> complex:
    import cmath

    return 2.0 * cmath.log(s) / (s * (s - 1.0))


# --- fractional calculus -----------------------------------------------------

_TEST_FUNCTIONS = {
    "t^2": (lambda t: t**2, lambda t: 2.0 * t),
    "sin": (np.sin, np.cos),
    "1+t": (lambda t: 1.0 + t, lambda t: np.ones_like(t)),
}
_ORDERS = (0.2, 0.4, 0.6, 0.8)


def _calculus_checks(full: bool) -> Iterator[_Check]:
    n = 1600 if full else 400
    grid = np.linspace(0.0, 2.0, n + 1)
    funcs = {k: fc.SampledFunction.from_callable(f, grid, df) for k, (f, df) in _TEST_FUNCTIONS.items()}
    probe = (0.5, 1.0, 1.5)
    tol = fc.law_tolerance(2.0 / n)

    def semigroup() -> float:
        worst = 0.0
        for f in funcs.values():
            for a in _ORDERS:
                b = 1.0 - 0.5 * a
                ja_jb = fc.rl_integral_grid(fc.rl_integral_grid(f, b), a)
                for t in probe:
                    worst = max(worst, abs(ja_jb(t) - fc.rl_integral(f, a + b, t)))
        return worst

    def left_inverse() -> float:
        # reported relative to the order-dependent tolerance
        worst = 0.0
        for f in funcs.values():
            for b in _ORDERS:
                jf = fc.rl_integral_grid(f, b)
                bound = fc.law_tolerance(2.0 / n, 1.0 + b)
                for t in probe:
                    worst = max(worst, abs(fc.rl_derivative(jf, b, t) - f(t)) / bound)
        return worst

    def offset() -> float:
        worst = 0.0
        for f in funcs.values():
            f0 = float(f.values[0])
            for b in _ORDERS:
                for t in probe:
                    diff = fc.rl_derivative(f, b, t) - fc.caputo_derivative(f, b, t)
                    worst = max(worst, abs(diff - f0 * t**-b / gamma(1.0 - b)))
        return worst

    yield ("semigroup J^a J^b = J^(a+b)", semigroup, tol, "below")
    yield ("left inverse D^b J^b = I (residual / tolerance)", left_inverse, 1.0, "below")
    yield ("Caputo vs Riemann-Liouville offset", offset, tol, "below")

    def laplace_rule() -> float:
        fine = np.linspace(0.0, 40.0, 8001 if full else 4001)
        worst = 0.0
        cases = {"exp(-t)": (lambda t: np.exp(-t), lambda t: -np.exp(-t)), **_TEST_FUNCTIONS}
        for name, (f, df) in cases.items():
            sf = fc.SampledFunction.from_callable(f, fine, df)
            for b in _ORDERS:
                worst = max(worst, fc.laplace_rule_check(sf, b, 2.0 if name != "exp(-t)" else 1.5, tol=1e-6))
        return worst

    yield ("Laplace rule of the Caputo derivative", laplace_rule, 1e-4 if not full else 2e-5, "below")
    f_t = funcs["1+t"]
    yield ("power rule D^0.5 t", lambda: abs(fc.caputo_derivative(f_t, 0.5, 1.0) - 2.0 / math.sqrt(math.pi)),
           1e-6, "below")


# --- Laplace inversion -------------------------------------------------------


def _laplace_checks() -> Iterator[_Check]:
    yield ("inverse of 2 s^-1.5",
           lambda: abs(oracles.inverse_laplace_ray(lambda s: 2.0 * s**-1.5, 1.0, subtract=1)
                       - 4.0 / math.sqrt(math.pi)), 1e-7, "below")
    yield ("inverse of 1/(s+1)",
           lambda: max(abs(oracles.inverse_laplace_ray(lambda s: 0j, t, poles={-1.0: 1.0}) - math.exp(-t))
                       for t in (0.5, 2.0)), 1e-12, "below")


# --- driver ------------------------------------------------------------------


def _checks(profile: str) -> Iterator[_Check]:
    full = profile == "full"
    yield from _special_checks()
    yield from _single_checks(full)
    yield from _distributed_checks(full)
    yield from _calculus_checks(full)
    yield from _laplace_checks()


def run_suite(profile: str = "fast", only: str | None = None) -> list[CheckResult]:
    """Run all checks of a profile; ``only`` filters by substring of the name."""
    if profile not in PROFILES:
        raise ValueError(f"unknown profile {profile!r}")
    out = []
    for name, fn, threshold, expect in _checks(profile):
        if only and only not in name:
            continue
        t0 = time.perf_counter()
        try:
            r = float(fn())
        except Exception as exc:  # reported, not raised
            out.append(CheckResult(name, math.nan, threshold, False, f"{type(exc).__name__}: {exc}",
                                   time.perf_counter() - t0))
            continue
        ok = r > threshold if expect == "above" else r <= threshold
        out.append(CheckResult(name, r, threshold, bool(ok), None, time.perf_counter() - t0))
    return out
