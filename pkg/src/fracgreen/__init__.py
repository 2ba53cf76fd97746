"""Green functions of time-fractional diffusion of single and distributed order.

Subpackages of note:

``specfun``            Wright M-function and Mittag-Leffler function.
``fraccalc``           Riemann-Liouville and Caputo operators on sampled data.
``single_order``       self-similar Green function of a single order.
``distributed_order``  Green function, variance and asymptotics for an order density.
``oracles``            independent quadrature/inversion cross-checks.
``cli``                command-line front end (``fracgreen``).
"""

from . import distributed_order, fraccalc, oracles, single_order, specfun
from .errors import (
    DegenerateDensity,
    DomainError,
    FracGreenError,
    PrecisionLoss,
    QuadratureError,
    TailError,
)

__version__ = "0.1.0"

__all__ = [
    "DegenerateDensity",
    "DomainError",
    "FracGreenError",
    "PrecisionLoss",
    "QuadratureError",
    "TailError",
    "distributed_order",
    "fraccalc",
    "oracles",
    "single_order",
    "specfun",
]
