"""How fast does a distributed-order process spread?

The variance mu2(t) is computed by inverting 2/(s B(s)) along the branch cut.
For two atoms the short-time law follows the larger order and the long-time
law the smaller one.  The approach is slow: the table shows how far out in t
the fitted exponents and prefactors get within a few percent.  For the
uniform density growth is logarithmic and the leading law carries a 1/ln t
correction.

Run:  python demos/03_variance_laws.py
"""

import math

import numpy as np

from fracgreen import distributed_order as do

two = do.two_atoms(0.25, 0.5, 0.75, 0.5)
small, large = do.asymptotic_laws(two)
print(f"two atoms: mu2 ~ {small.prefactor:.4f} t^{small.exponent} (t -> 0), "
      f"{large.prefactor:.4f} t^{large.exponent} (t -> inf)")

print("\n window           slope   prefactor   slope err   prefactor err")
for lo in (-9, -7, -5, -3, 2, 5, 8):
    t = np.logspace(lo, lo + 1, 11)
    fit = do.fit_asymptote(t, do.moment_curve(two, t).mu2)
    law = small if lo < 0 else large
    print(f" 1e{lo:+d}..1e{lo + 1:+d}   {fit.exponent:.4f}   {fit.prefactor:9.4f}   "
          f"{fit.exponent / law.exponent - 1:+9.2%}   {fit.prefactor / law.prefactor - 1:+9.2%}")

print("\nuniform density")
print("      t        mu2          mu2 / leading law")
for t in (1e-9, 1e-6, 1e-3, 1e3, 1e6, 1e9):
    mu = do.moment_curve(do.uniform(), [t]).mu2[0]
    lead = 2 * t * math.log(1 / t) if t < 1 else 2 * math.log(t)
    print(f"  {t:8.0e}  {mu:12.6e}   {mu / lead:.4f}")

# The slope of mu2 against ln t converges much faster than the ratio.
t = np.logspace(2, 3, 6)
fit = do.fit_asymptote(t, do.moment_curve(do.uniform(), t).mu2, "log", "large")
print(f"\nd mu2 / d ln t over 1e2..1e3: {fit.prefactor:.4f} (limit 2)")
