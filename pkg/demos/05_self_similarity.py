"""Does one scaling exponent collapse the profiles?

For a single order, t^c u(X t^c, t) does not depend on t when c = beta/2.
Mixing orders breaks this: no exponent makes the curves at t = 0.5 and
t = 2 coincide.

Run:  python demos/05_self_similarity.py
"""

import numpy as np

from fracgreen import distributed_order as do

X = np.linspace(0.0, 3.0, 13)
cs = np.round(np.linspace(0.05, 0.95, 19), 2)
single = do.single(0.5)
two = do.two_atoms(0.25, 0.5, 0.75, 0.5)

print("   c    single order 0.5    two atoms")
for c in cs:
    a = do.collapse_discrepancy(single, c, X)
    b = do.collapse_discrepancy(two, c, X, tol=1e-9)
    print(f"  {c:.2f}   {a:14.3e}   {b:12.3e}")
