"""Fractional integrals and derivatives of sampled data.

Product integration on a uniform grid: halve the step and watch the
residuals of the operator identities fall.  All three are second order for
f = sin.  With f(0) != 0 the left inverse drops to order 1 + beta, since
J^beta f then behaves like t^beta at the origin.

Run:  python demos/04_fractional_calculus.py
"""

import math

import numpy as np
from scipy.special import gamma

from fracgreen import fraccalc as fc

beta = 0.4
print(f"residuals at t = 1, beta = {beta}, f = sin")
print("    n      semigroup    left inverse   Caputo offset")
for n in (100, 200, 400, 800):
    grid = np.linspace(0.0, 2.0, n + 1)
    f = fc.SampledFunction.from_callable(np.sin, grid, np.cos)
    g = fc.SampledFunction.from_callable(lambda t: 1 + np.sin(t), grid, np.cos)
    semi = abs(fc.rl_integral_grid(fc.rl_integral_grid(f, beta), 0.5)(1.0) - fc.rl_integral(f, beta + 0.5, 1.0))
    inv = abs(fc.rl_derivative(fc.rl_integral_grid(f, beta), beta, 1.0) - math.sin(1.0))
    off = abs(fc.rl_derivative(g, beta, 1.0) - fc.caputo_derivative(g, beta, 1.0) - 1.0 / gamma(1 - beta))
    print(f"  {n:4d}   {semi:11.3e}   {inv:11.3e}   {off:11.3e}")

# Caputo ignores constants, Riemann-Liouville does not.
grid = np.linspace(0.0, 2.0, 401)
one = fc.SampledFunction(grid, np.ones_like(grid), np.zeros_like(grid))
print(f"\nD^0.5 of 1: Caputo {fc.caputo_derivative(one, 0.5, 1.0):.3g}, "
      f"Riemann-Liouville {fc.rl_derivative(one, 0.5, 1.0):.6f} (1/sqrt(pi) = {1 / math.sqrt(math.pi):.6f})")

# The Laplace rule links the Caputo derivative to s^beta f~(s) - s^(beta-1) f(0).
grid = np.linspace(0.0, 8.0, 20001)
e = fc.SampledFunction.from_callable(lambda t: np.exp(-t), grid, lambda t: -np.exp(-t))
print(f"Laplace rule residual for exp(-t), s = 2: {fc.laplace_rule_check(e, 0.5, 2.0):.2e}")
