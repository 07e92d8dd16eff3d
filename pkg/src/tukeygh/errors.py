"""Exception types shared across the package."""


class TukeyGhError(Exception):
    """Base class for all package errors."""


class DomainError(TukeyGhError):
    """An argument lies outside the mathematical domain of an operation."""


class NonConvergence(TukeyGhError):
    """An iterative procedure hit its iteration cap before meeting tolerance.

    Carries the best iterate found so far in ``best`` when available.
    """

    def __init__(self, message, best=None, diagnostics=None):
        super().__init__(message)
        self.best = best
        self.diagnostics = diagnostics or {}


class SupportViolation(TukeyGhError):
    """An observation falls outside the transformed knot range."""


class DegenerateSample(TukeyGhError):
    """Sample quantiles are too degenerate for the requested estimator."""


class InitializationFailure(TukeyGhError):
    """No starting point satisfying the support condition could be found."""


class SingularInformation(TukeyGhError):
    """The observed information matrix is not invertible at working precision."""
