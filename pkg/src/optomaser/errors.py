"""Exception types raised across the package."""

__all__ = [
    "OptomaserError",
    "InvalidDimensionError",
    "DimensionMismatchError",
    "SolverFailureError",
    "ConvergenceError",
    "IntegrationFailureError",
    "UndefinedFanoError",
    "WindowTooSmallError",
]


class OptomaserError(Exception):
    """Base class for errors raised by this package."""


class InvalidDimensionError(OptomaserError, ValueError):
    """A Hilbert-space dimension or cutoff is out of range."""


class DimensionMismatchError(OptomaserError, ValueError):
    """Operands live on incompatible Hilbert spaces."""


class SolverFailureError(OptomaserError, RuntimeError):
    """A linear solve failed; carries the best residual reached."""

    def __init__(self, message, residual=None):
        super().__init__(message)
        self.residual = residual


class ConvergenceError(OptomaserError, RuntimeError):
    """A fixed-point or root-finding iteration did not converge."""

    def __init__(self, message, last_iterate=None):
        super().__init__(message)
        self.last_iterate = last_iterate


class IntegrationFailureError(OptomaserError, RuntimeError):
    """An ODE integration failed (step-size underflow or similar)."""


class UndefinedFanoError(OptomaserError, ValueError):
    """Fano factor requested for a distribution with zero mean."""


class WindowTooSmallError(OptomaserError, ValueError):
    """The phase-space window does not contain the state."""
