"""Exception types shared across the package."""


class CapacityError(ValueError):
    """Requested Hilbert-space dimension exceeds the dense-solver cap."""


class HermiticityError(ValueError):
    """Matrix violates the Hermiticity tolerance of the operation."""


class PositivityError(ValueError):
    """Eigenvalue is negative beyond the roundoff clamping window."""


class PurityError(ValueError):
    """Operation defined for pure states received a mixed state."""


class ConvergenceError(RuntimeError):
    """Dense eigensolver failed to converge."""
