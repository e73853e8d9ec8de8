"""
Exceptions and Warnings
=======================

Define the exceptions and warnings raised by :mod:`partial_ranking`.
"""

from __future__ import annotations

__author__ = "Partial Ranking Developers"
__copyright__ = "Copyright 2026 Partial Ranking Developers"
__license__ = "BSD-3-Clause - https://opensource.org/licenses/BSD-3-Clause"
__maintainer__ = "Partial Ranking Developers"
__email__ = "partial-ranking-developers@googlegroups.com"
__status__ = "Production"

__all__ = [
    "PartialRankingError",
    "DataError",
    "EnumerationBudgetError",
    "ConvergenceError",
    "InconsistentSystemError",
    "OptimizerWarning",
    "DataWarning",
]


class PartialRankingError(Exception):
    """Base exception of :mod:`partial_ranking`."""


class DataError(PartialRankingError, ValueError):
    """
    Raised when input data, e.g., a graph, a ranking or a *CSV* file, is
    malformed.
    """


class EnumerationBudgetError(PartialRankingError):
    """Raised when an enumeration would exceed its configured budget."""


class ConvergenceError(PartialRankingError):
    """Raised when an iterative algorithm fails to converge."""


class InconsistentSystemError(PartialRankingError):
    """
    Raised when an over-determined linear system has no solution within
    tolerance.

    Parameters
    ----------
    message
        Error message.
    edge
        Edge with the largest residual.
    residual
        Largest absolute residual.
    """

    def __init__(
        self, message: str, edge: tuple[int, int], residual: float
    ) -> None:
        super().__init__(message)

        self.edge = edge
        self.residual = residual


class OptimizerWarning(UserWarning):
    """Issued when a numerical optimizer stops before convergence."""


class DataWarning(UserWarning):
    """Issued when input data is silently altered, e.g., rows dropped."""
