"""Exception types shared across the package."""


class DomainError(ValueError):
    """An argument violates a documented precondition."""


class AccuracyError(RuntimeError):
    """A computation ran out of budget before reaching its tolerance.

    Carries the best available estimate in ``best`` so callers can emit
    partial output.
    """

    def __init__(self, message, best=None):
        super().__init__(message)
        self.best = best


class EvaluationError(RuntimeError):
    """An integrand or evaluator produced a non-finite value.

    ``abscissa`` records the offending point when known.
    """

    def __init__(self, message, abscissa=None):
        super().__init__(message)
        self.abscissa = abscissa
