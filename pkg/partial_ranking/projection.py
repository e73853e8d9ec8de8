"""
Projection
==========

Define the weighted least squares projections onto polyhedra used by the
restricted estimator:

-   :func:`partial_ranking.project_onto_polyhedron`: Exact primal active-set
    solver for :math:`\\min \\frac{1}{2} \\sum w (x - y)^2` subject to
    :math:`G x \\leq h`.
-   :func:`partial_ranking.minmax_isotonic`: Isotonic regression under a
    partial order through the max-min formula over upper and lower sets,
    optionally capped.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from itertools import combinations

import numpy as np

from partial_ranking.exceptions import (
    ConvergenceError,
    DataError,
    EnumerationBudgetError,
)
from partial_ranking.hints import ArrayLike, NDArrayFloat

__author__ = "Partial Ranking Developers"
__copyright__ = "Copyright 2026 Partial Ranking Developers"
__license__ = "BSD-3-Clause - https://opensource.org/licenses/BSD-3-Clause"
__maintainer__ = "Partial Ranking Developers"
__email__ = "partial-ranking-developers@googlegroups.com"
__status__ = "Production"

__all__ = [
    "ProjectionResult",
    "project_onto_polyhedron",
    "polyhedron_vertices",
    "MAXIMUM_ISOTONIC_ELEMENTS",
    "minmax_isotonic",
]

LOGGER = logging.getLogger(__name__)

MAXIMUM_ISOTONIC_ELEMENTS: int = 16
"""Largest element count :func:`partial_ranking.minmax_isotonic` enumerates."""


@dataclass(frozen=True)
class ProjectionResult:
    """
    Define the result of :func:`partial_ranking.project_onto_polyhedron`.

    Parameters
    ----------
    x
        Projection.
    active
        Indexes of the rows of the working set at the optimum.
    multipliers
        *Lagrange* multipliers of the working set rows.
    objective
        Weighted squared distance :math:`\\sum w (x - y)^2`.
    iterations
        Active-set iterations.
    """

    x: NDArrayFloat
    active: tuple[int, ...]
    multipliers: NDArrayFloat
    objective: float
    iterations: int


def _restore_working_set(
    x: NDArrayFloat,
    weights: NDArrayFloat,
    G_W: NDArrayFloat,
    h_W: NDArrayFloat,
) -> NDArrayFloat:
    """
    Return the weighted nearest point to given point on the working set
    hyperplanes, removing the drift accumulated by the steps.
    """

    if G_W.shape[0] == 0:
        return x

    inverse = G_W / weights
    correction = np.linalg.solve(inverse @ G_W.T, G_W @ x - h_W)

    return x - inverse.T @ correction


def project_onto_polyhedron(
    y: ArrayLike,
    weights: ArrayLike,
    G: ArrayLike,
    h: ArrayLike,
    x0: ArrayLike,
    tol: float = 1e-12,
    max_iter: int | None = None,
) -> ProjectionResult:
    """
    Project given point onto the polyhedron :math:`G x \\leq h` in the
    weighted Euclidean norm, i.e., solve
    :math:`\\min_x \\frac{1}{2} \\sum_e w_e (x_e - y_e)^2` subject to
    :math:`G x \\leq h` with a primal active-set method.

    Parameters
    ----------
    y
        Point to project.
    weights
        Positive weights.
    G
        Inequality matrix.
    h
        Inequality bounds.
    x0
        Feasible starting point, the solution does not depend on it.
    tol
        Numerical tolerance for step lengths, multipliers and feasibility.
    max_iter
        Maximum active-set iterations, defaults to ten times the number of
        rows and columns.

    Returns
    -------
    :class:`partial_ranking.ProjectionResult`
        Projection and its working set.

    Raises
    ------
    DataError
        If the weights are not positive or the starting point is infeasible.
    ConvergenceError
        If the iteration limit is reached.

    Examples
    --------
    >>> result = project_onto_polyhedron(
    ...     [0.3, 0.4], [10, 10], [[-1, 1]], [0], [0.5, 0.5]
    ... )
    >>> np.round(result.x, 12).tolist()
    [0.35, 0.35]
    """

    y = np.asarray(y, dtype=np.float64)
    weights = np.asarray(weights, dtype=np.float64)
    G = np.asarray(G, dtype=np.float64).reshape(-1, y.size)
    h = np.asarray(h, dtype=np.float64)
    x = np.array(x0, dtype=np.float64)

    if np.any(weights <= 0):
        msg = f"Weights must be positive, got {weights}!"
        raise DataError(msg)

    if np.any(G @ x > h + 1e-9):
        msg = "Starting point does not satisfy the inequality system!"
        raise DataError(msg)

    n_rows, n_columns = G.shape
    if max_iter is None:
        max_iter = 10 * (n_rows + n_columns) + 10

    Q = np.diag(weights)
    working: list[int] = []

    for iteration in range(1, max_iter + 1):
        G_W = G[working]
        n_working = len(working)

        kkt = np.block(
            [
                [Q, G_W.T],
                [G_W, np.zeros((n_working, n_working))],
            ]
        )
        rhs = np.concatenate([-weights * (x - y), np.zeros(n_working)])
        solution = np.linalg.solve(kkt, rhs)
        d, multipliers = solution[:n_columns], solution[n_columns:]

        if np.max(np.abs(d), initial=0) <= tol:
            if n_working == 0 or np.min(multipliers) >= -tol:
                LOGGER.debug(
                    "Active-set projection converged in %s iterations with "
                    "%s active constraints.",
                    iteration,
                    n_working,
                )
                return ProjectionResult(
                    x,
                    tuple(working),
                    multipliers,
                    float(np.sum(weights * (x - y) ** 2)),
                    iteration,
                )

            working.pop(int(np.argmin(multipliers)))
            continue

        step, blocking = 1.0, None
        G_d = G @ d
        for row in range(n_rows):
            if row in working or G_d[row] <= tol:
                continue

            length = max(h[row] - G[row] @ x, 0) / G_d[row]
            if length < step:
                step, blocking = length, row

        x = x + step * d
        if blocking is not None:
            working.append(blocking)
            x = _restore_working_set(x, weights, G[working], h[working])

    msg = f"Active-set projection did not converge in {max_iter} iterations!"
    raise ConvergenceError(msg)


def polyhedron_vertices(
    G: ArrayLike,
    h: ArrayLike,
    tol: float = 1e-9,
    max_combinations: int = 10000,
) -> list[NDArrayFloat]:
    """
    Return the vertices of the polyhedron :math:`G x \\leq h` found among
    the first ``max_combinations`` row combinations.

    Examples
    --------
    >>> G = [[1, 0], [0, 1], [-1, 0], [0, -1]]
    >>> len(polyhedron_vertices(G, [1, 1, 0, 0]))
    4
    """

    G = np.asarray(G, dtype=np.float64)
    h = np.asarray(h, dtype=np.float64)
    n_columns = G.shape[1]

    vertices: list[NDArrayFloat] = []
    for count, rows in enumerate(combinations(range(G.shape[0]), n_columns)):
        if count >= max_combinations:
            LOGGER.debug(
                "Vertex enumeration stopped after %s combinations.", count
            )
            break

        G_rows = G[list(rows)]
        if abs(np.linalg.det(G_rows)) <= tol:
            continue

        vertex = np.linalg.solve(G_rows, h[list(rows)])
        if np.all(G @ vertex <= h + tol) and not any(
            np.allclose(vertex, other, atol=tol) for other in vertices
        ):
            vertices.append(vertex)

    return vertices


def _closed_subsets(
    n: int, pairs: list[tuple[int, int]], upward: bool
) -> list[int]:
    """
    Return the bit masks of the upper (or lower) sets of the partial order
    generated by given pairs.
    """

    masks = []
    for mask in range(1, 1 << n):
        closed = True
        for lower, upper in pairs:
            source, target = (lower, upper) if upward else (upper, lower)
            if mask >> source & 1 and not mask >> target & 1:
                closed = False
                break

        if closed:
            masks.append(mask)

    return masks


def minmax_isotonic(
    values: ArrayLike,
    weights: ArrayLike,
    order: list[tuple[int, int]],
    cap: float | None = None,
) -> NDArrayFloat:
    """
    Return the weighted isotonic regression of given values under the partial
    order generated by ``order`` pairs :math:`(a, b)` meaning
    :math:`x_a \\leq x_b`: each component is the maximum over the upper sets
    containing it of the minimum over the lower sets containing it of the
    weighted average on their intersection.

    Parameters
    ----------
    values
        Values to regress.
    weights
        Positive weights.
    order
        Order pairs on the value indexes.
    cap
        Common upper bound, clipping the isotonic regression yields the
        projection onto the capped cone.

    Raises
    ------
    EnumerationBudgetError
        If there are more than :attr:`MAXIMUM_ISOTONIC_ELEMENTS` values.

    Examples
    --------
    >>> minmax_isotonic([0.3, 0.4], [10, 10], [(1, 0)]).tolist()
    [0.35, 0.35]
    >>> minmax_isotonic([0.0, 8 / 9], [2, 9], [(0, 1)], cap=0.5).tolist()
    [0.0, 0.5]
    """

    values = np.asarray(values, dtype=np.float64)
    weights = np.asarray(weights, dtype=np.float64)
    n = values.size

    if n > MAXIMUM_ISOTONIC_ELEMENTS:
        msg = (
            f"Min-max isotonic regression enumerates subsets of at most "
            f"{MAXIMUM_ISOTONIC_ELEMENTS} values, got {n}!"
        )
        raise EnumerationBudgetError(msg)

    if np.any(weights <= 0):
        msg = f"Weights must be positive, got {weights}!"
        raise DataError(msg)

    bits = 1 << np.arange(n)
    upper_sets = np.array(_closed_subsets(n, order, True))
    lower_sets = np.array(_closed_subsets(n, order, False))

    def membership(masks: np.ndarray) -> np.ndarray:
        return (masks[:, None] & bits[None, :]) > 0

    upper = membership(upper_sets)
    lower = membership(lower_sets)

    fitted = np.empty(n)
    for i in range(n):
        U = upper[upper[:, i]]
        L = lower[lower[:, i]]
        intersection = U[:, None, :] & L[None, :, :]
        averages = (intersection * (weights * values)).sum(-1) / (
            intersection * weights
        ).sum(-1)
        fitted[i] = np.max(np.min(averages, axis=1))

    if cap is not None:
        fitted = np.minimum(fitted, cap)

    return fitted
