"""Single-order Green functions and three ways to compute them.

For a single order beta the solution is one profile U(X) stretched by
t^(beta/2).  This script tabulates U for a few orders and evaluates it three
independent ways: the power series of the M-function, the cosine transform
of the Mittag-Leffler function, and a Mellin-Barnes line integral.

Run:  python demos/01_single_order.py
"""

import math

import numpy as np

from fracgreen import oracles, single_order

BETAS = (0.25, 0.5, 0.75, 1.0)
XS = np.array([0.0, 0.5, 1.0, 2.0, 3.0, 4.0])

# As beta drops, the peak sharpens and the tails get heavier.
print("Reduced profile U(X) = u(X, t=1)")
print("   X  " + "".join(f"  beta={b:<5}" for b in BETAS))
for x in XS:
    print(f"{x:5.1f} " + "".join(f"  {single_order.reduced_green(b, x).value:10.7f}" for b in BETAS))

# beta = 1 is the heat kernel.
heat = math.exp(-0.25) / (2 * math.sqrt(math.pi))
print(f"\nbeta=1, x=1, t=1: series {single_order.green(1.0, 1.0, 1.0).value:.12f}, heat kernel {heat:.12f}")

# The two oracles share no code with the series.
print("\nCross-check at beta = 0.5")
line = oracles.ContourSpec(sigma=1.5)
for x in XS:
    s = single_order.reduced_green(0.5, x).value
    c = oracles.fourier_cosine_U(0.5, x)
    m = oracles.mellin_barnes_U(0.5, x, line)
    print(f"  X={x:3.1f}  series {s:.12f}  |cos - series| {abs(c - s):.1e}  |MB - series| {abs(m - s):.1e}")

# Variance grows like t^beta; the series integrates to it.
print("\nVariance at t = 2")
for b in BETAS[:-1]:
    num = single_order.spatial_moment(b, 2.0, 2)
    print(f"  beta={b}: quadrature {num:.10f}   2 t^b / Gamma(b+1) = {single_order.second_moment(b, 2.0):.10f}")
