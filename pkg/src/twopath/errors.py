"""Exception and warning types raised across the package."""


class NormalizationError(ValueError):
    """Path amplitudes do not satisfy a**2 + b**2 == 1."""


class NonFiniteInput(ValueError):
    pass


class QuadratureBudgetExceeded(RuntimeError):
    pass


class DegeneratePair(ZeroDivisionError):
    """Both points of a probe pair carry (numerically) zero probability."""


class InvalidMode(ValueError):
    pass


class ModeMismatch(ValueError):
    pass


class InsufficientSamples(ValueError):
    pass


class ConvergenceWarning(UserWarning):
    pass


class OutOfRange(UserWarning):
    """An estimator left its physical range and was clamped."""
