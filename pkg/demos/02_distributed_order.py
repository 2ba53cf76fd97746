"""Green function for a mixture of orders.

A two-atom density b = 0.5 delta(beta-0.25) + 0.5 delta(beta-0.75) and the
uniform density on [0, 1].  The profile is computed from the phi_k series,
from a single real ray integral, and (for one point) from the brute-force
double inversion: first over the branch cut of the Laplace transform, then
over the Fourier variable.

Run:  python demos/02_distributed_order.py
"""

import time

from fracgreen import distributed_order as do
from fracgreen import oracles
from fracgreen.errors import PrecisionLoss

two = do.two_atoms(0.25, 0.5, 0.75, 0.5)
uni = do.uniform()

print("Branch-cut data B(r e^{i pi}) = rho e^{i pi gamma}")
for r in (0.01, 1.0, 100.0):
    a, b = do.branch_cut(two, r), do.branch_cut(uni, r)
    print(f"  r={r:<6} two atoms: rho={a.rho:.6f} gamma={a.gamma:.4f}   uniform: rho={b.rho:.6f} gamma={b.gamma:.4f}")

print("\nu(x, t=1): series against the ray integral")
for x in (0.0, 0.5, 1.0, 2.0, 4.0, 8.0):
    ray = do.green_ray(two, x, 1.0).value
    try:
        ser = f"{do.green_series(two, x, 1.0).value:.12f}"
    except PrecisionLoss:
        # the alternating series cancels too badly here; the ray integral does not
        ser = "precision loss"
    print(f"  x={x:<4} series {ser:>16}   ray {ray:.12f}")

t0 = time.perf_counter()
brute = oracles.double_inversion_u(two, 1.0, 1.0)
print(f"\ndouble inversion at (1, 1): {brute:.10f}  "
      f"(series {do.green_series(two, 1.0, 1.0).value:.10f}, {time.perf_counter() - t0:.1f} s)")

print("\nFirst few time-scale functions phi_k(t=1)")
for k in range(5):
    print(f"  k={k}: two atoms {do.phi_k(two, k, 1.0):+.8f}   uniform {do.phi_k(uni, k, 1.0):+.8f}")
