"""Exceptions raised by the numerical routines."""


class FracGreenError(Exception):
    """Base class for all errors raised by :mod:`fracgreen`."""


class DomainError(FracGreenError, ValueError):
    """An argument lies outside the domain of the operation."""


class PrecisionLoss(FracGreenError, ArithmeticError):
    """Floating-point cancellation prevents reaching the requested tolerance."""


class QuadratureError(FracGreenError, ArithmeticError):
    """A quadrature did not converge to the requested tolerance."""


class TailError(QuadratureError):
    """The truncated tail of an infinite integral is larger than allowed."""


class DegenerateDensity(FracGreenError, ValueError):
    """An order density gives branch-cut data outside the admissible range."""
