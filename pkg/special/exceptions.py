"""Exception hierarchy shared by every app of the project."""


class ResonanceError(Exception):
    """Base class for errors raised by the resonance library."""


class DomainError(ResonanceError, ValueError):
    """An argument lies outside the domain of the requested operation."""


class NonFiniteError(DomainError):
    """A public operation produced NaN or infinity."""


class ConvergenceError(ResonanceError, ArithmeticError):
    """An iterative method failed to reach or certify its target."""

    def __init__(self, message, *, iterations=None, last_iterate=None, residual=None):
        super().__init__(message)
        self.iterations = iterations
        self.last_iterate = last_iterate
        self.residual = residual
