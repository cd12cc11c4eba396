"""Exception hierarchy shared by all numerical modules."""

from __future__ import annotations


class NumericsError(Exception):
    """Base class for all errors raised by this package."""


class PoleError(NumericsError):
    """Evaluation requested at (or numerically indistinguishable from) a pole."""


class DomainError(NumericsError):
    """Argument outside the supported domain of an operation."""


class AccuracyError(NumericsError):
    """Internal error bound exceeds the requested tolerance."""


class CapacityError(NumericsError):
    """Requested table or sum exceeds the configured memory/cost budget."""


class ConvergenceError(NumericsError):
    """Parameters lie outside the convergence/continuation regime."""


class FitError(NumericsError):
    """Least-squares fit residual too large to trust the coefficients."""


class BudgetError(NumericsError):
    """Evaluation budget exhausted before the tolerance was met.

    The best estimate computed so far is attached as ``result`` so callers
    can inspect the flagged partial answer.
    """

    def __init__(self, message: str, result=None):
        super().__init__(message)
        self.result = result
