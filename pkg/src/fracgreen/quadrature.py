"""Quadrature engines shared by the distributed-order pipeline and the oracles.

``log_ray_integral`` integrates over the positive real axis in the variable
``L = log r``; both tails are mapped by an exponential substitution so that
integrands decaying only algebraically in ``L`` (continuous order densities)
are handled as well as the usual exponential decay.

``cosine_transform`` computes ``int_0^inf f(k) cos(k x) dk`` by summing panels
between consecutive zeros of the cosine and extrapolating the alternating
panel sums with Wynn's epsilon algorithm.
"""

from __future__ import annotations

import math
import warnings
from typing import Callable, Iterable, Sequence

import numpy as np
from scipy.integrate import IntegrationWarning, quad

from .errors import QuadratureError

__all__ = ["cosine_transform", "log_ray_integral", "wynn_epsilon"]

_TAIL_SEGMENT = 1.0
_MAX_TAIL_V = 60.0


def _quad(f, a, b, epsabs, epsrel, points=None, limit=400):
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", IntegrationWarning)
        pts = None
        if points is not None:
            pts = sorted({p for p in points if a < p < b})
            pts = pts or None
        val, err = quad(f, a, b, epsabs=epsabs, epsrel=epsrel, limit=limit, points=pts)[:2]
    return val, err


def log_ray_integral(
    g: Callable[[float], float],
    lo: float,
    hi: float,
    tol: float,
    points: Iterable[float] = (),
    epsrel: float = 1e-12,
    what: str = "ray integral",
) -> tuple[float, float]:
    """Integrate ``g(L)`` over the whole real line.

    ``[lo, hi]`` is the core interval (integrated adaptively, with
    ``points`` as breakpoints).  The left tail is mapped by
    ``L = lo - (e^v - 1)`` and the right tail by ``L = hi + (e^v - 1)``; each
    tail is integrated in unit segments of ``v`` until a segment contributes
    less than ``tol / 10``.

    Returns ``(value, error_estimate)``.  Raises :class:`QuadratureError` if a
    tail does not die out or the estimated error exceeds ``tol``.
    """
    if not hi > lo:
        raise ValueError("empty core interval")
    pts = [p for p in points if math.isfinite(p)]
    core, err = _quad(g, lo, hi, 0.05 * tol, epsrel, points=pts)
    total = core
    for side in (-1.0, 1.0):
        anchor = lo if side < 0 else hi

        def mapped(v: float, anchor=anchor, side=side) -> float:
            ev = math.exp(v)
            return g(anchor + side * (ev - 1.0)) * ev

        v = 0.0
        small = 0
        while True:
            seg, seg_err = _quad(mapped, v, v + _TAIL_SEGMENT, 0.01 * tol, epsrel)
            total += seg
            err += seg_err
            v += _TAIL_SEGMENT
            small = small + 1 if abs(seg) < 0.1 * tol else 0
            if small >= 2:
                break
            if v >= _MAX_TAIL_V:
                raise QuadratureError(
                    f"{what}: {'left' if side < 0 else 'right'} tail still contributes "
                    f"{abs(seg):.3g} at |L| ~ e^{v:.0f}"
                )
    if err > tol * max(1.0, abs(total)):
        raise QuadratureError(f"{what}: error estimate {err:.3g} exceeds tol={tol:.3g}")
    return total, err


def wynn_epsilon(partial_sums: Sequence[float]) -> float:
    """Wynn's epsilon extrapolation of a sequence of partial sums."""
    s = [float(v) for v in partial_sums]
    n = len(s)
    if n < 3:
        return s[-1]
    prev = [0.0] * (n + 1)
    cur = s[:]
    best = s[-1]
    for k in range(1, n):
        nxt = []
        for i in range(len(cur) - 1):
            diff = cur[i + 1] - cur[i]
            if diff == 0.0:
                # converged column; keep the last finite even column
                return cur[i + 1] if k % 2 == 1 else best
            nxt.append(prev[i + 1] + 1.0 / diff)
        prev, cur = cur, nxt
        if k % 2 == 0 and cur:
            best = cur[-1]
        if len(cur) < 2:
            break
    return best


def cosine_transform(
    f: Callable[[float], float],
    x: float,
    tol: float,
    max_panels: int = 400,
    what: str = "cosine transform",
) -> tuple[float, float]:
    """``int_0^inf f(k) cos(k x) dk`` for ``f`` decaying at least like ``1/k^2``.

    For ``x == 0`` the range ``[1, inf)`` is folded onto ``(0, 1]`` by
    ``k = 1/u``.  For ``x > 0`` panels end at the zeros of ``cos(k x)`` and
    the alternating panel sums are extrapolated until two successive
    extrapolations agree to ``tol / 10``.

    Returns ``(value, error_estimate)``.
    """
    if x == 0.0:
        head, e1 = _quad(f, 0.0, 1.0, 0.05 * tol, 1e-12)

        def folded(u: float) -> float:
            return f(1.0 / u) / (u * u) if u > 0.0 else 0.0

        tail, e2 = _quad(folded, 0.0, 1.0, 0.05 * tol, 1e-12, points=[1e-3, 1e-2, 0.1])
        return head + tail, e1 + e2

    x = abs(x)
    half = math.pi / x

    def panel(a: float, b: float) -> tuple[float, float]:
        return _quad(lambda k: f(k) * math.cos(k * x), a, b, 0.01 * tol, 1e-12)

    edges = [0.0, 0.5 * half]
    value, err = panel(0.0, 0.5 * half)
    sums = [value]
    estimates: list[float] = []
    for j in range(max_panels):
        a = (j + 0.5) * half
        b = (j + 1.5) * half
        p, e = panel(a, b)
        err += e
        edges.append(b)
        sums.append(sums[-1] + p)
        if len(sums) >= 6:
            window = sums[-min(len(sums), 24):]
            estimates.append(wynn_epsilon(window))
            if len(estimates) >= 3:
                d1 = abs(estimates[-1] - estimates[-2])
                d2 = abs(estimates[-2] - estimates[-3])
                if max(d1, d2) < 0.1 * tol:
                    return estimates[-1], err + max(d1, d2)
    raise QuadratureError(f"{what}: panel extrapolation did not settle within {max_panels} panels")


def breakpoints_where(h: Callable[[float], float], target: float, lo: float, hi: float, n: int = 200) -> list[float]:
    """Locations on a uniform grid of ``[lo, hi]`` where ``h`` crosses ``target``."""
    grid = np.linspace(lo, hi, n)
    vals = np.array([h(L) for L in grid]) - target
    idx = np.nonzero(np.sign(vals[:-1]) != np.sign(vals[1:]))[0]
    return [float(0.5 * (grid[i] + grid[i + 1])) for i in idx]
