"""Exception types shared across the solver stack."""


class SolverError(Exception):
    """A numerical procedure failed (as opposed to being misconfigured)."""


class DivergenceError(SolverError):
    """Integration produced a non-finite value."""


class UnscalableEndpointError(SolverError):
    """The far-field derivative is non-positive, so no scale factor exists."""


class BadBracketError(SolverError):
    """The root-finder bracket does not change sign."""


class NoConvergenceError(SolverError):
    """The root-finder ran out of iterations."""

    def __init__(self, message, trace=None):
        super().__init__(message)
        self.trace = trace


class SaturatedError(SolverError):
    """A convergence study hit the round-off floor; the observed order would be noise."""


class InvalidGridError(ValueError):
    """The step size does not tile the integration interval."""
