"""
Inference
=========

Define the estimation and testing of rankings from observed outcomes:

-   :func:`partial_ranking.unrestricted_mle`,
    :func:`partial_ranking.restricted_mle`: Unrestricted and restricted
    maximum likelihood estimates of the win probabilities.
-   :func:`partial_ranking.test_statistic`: Likelihood ratio statistic.
-   :func:`partial_ranking.pvalue_finite_sample`: Exact finite sample
    p-value, maximising the rejection probability over the null polytope.
-   :func:`partial_ranking.pvalue_asymptotic`: Asymptotic p-value simulated
    under the least favourable distribution, every edge fair.
-   :func:`partial_ranking.test_ranking`,
    :func:`partial_ranking.confidence_set`: Tests of the hypothesis that a
    ranking is consistent with the data and their inversion.
"""

from __future__ import annotations

import logging
import warnings
from dataclasses import dataclass, field
from functools import cached_property
from typing import Any, Literal

import numpy as np
from scipy.special import rel_entr
from scipy.stats import binom

from partial_ranking.core import (
    MAXIMUM_ENUMERATION_TEAMS,
    OutcomeData,
    ProbabilityAssignment,
    Ranking,
    TournamentGraph,
    enumerate_rankings,
)
from partial_ranking.exceptions import (
    DataError,
    EnumerationBudgetError,
    OptimizerWarning,
)
from partial_ranking.hints import (
    ArrayLike,
    LiteralMethod,
    NDArrayBoolean,
    NDArrayFloat,
    NDArrayInt,
)
from partial_ranking.ident import (
    ConstraintSystem,
    IdentifiedSet,
    build_constraint_system,
)
from partial_ranking.projection import (
    minmax_isotonic,
    polyhedron_vertices,
    project_onto_polyhedron,
)

__author__ = "Partial Ranking Developers"
__copyright__ = "Copyright 2026 Partial Ranking Developers"
__license__ = "BSD-3-Clause - https://opensource.org/licenses/BSD-3-Clause"
__maintainer__ = "Partial Ranking Developers"
__email__ = "partial-ranking-developers@googlegroups.com"
__status__ = "Production"

__all__ = [
    "METHODS",
    "DEFAULT_REPLICATIONS_ASYMPTOTIC",
    "DEFAULT_ENUMERATION_BUDGET",
    "DEFAULT_STATISTIC_TOLERANCE",
    "FiniteSampleOptions",
    "RestrictedFit",
    "TestOutcome",
    "unrestricted_mle",
    "restricted_mle",
    "test_statistic",
    "strict_threshold",
    "enumerate_outcomes",
    "region_probability",
    "region_probability_gradient",
    "FiniteSamplePValue",
    "FiniteSampleNull",
    "AsymptoticNull",
    "pvalue_finite_sample",
    "pvalue_asymptotic",
    "RankingTester",
    "test_ranking",
    "confidence_set",
]

LOGGER = logging.getLogger(__name__)

METHODS: tuple[str, ...] = ("finite_sample", "asymptotic")
"""Supported p-value methods."""

DEFAULT_REPLICATIONS_ASYMPTOTIC: int = 20000
"""Default simulated datasets of the asymptotic p-value."""

DEFAULT_ENUMERATION_BUDGET: int = 10**7
"""Default largest number of outcome tuples of the finite sample p-value."""

FEASIBILITY_TOLERANCE: float = 1e-12
"""Tolerance under which estimates are deemed to satisfy the null system."""

DEFAULT_STATISTIC_TOLERANCE: float = 1e-9
"""Default relative tolerance of the strict comparison of statistics."""


@dataclass(frozen=True)
class FiniteSampleOptions:
    """
    Define the options of the finite sample p-value.

    Parameters
    ----------
    enumeration_budget
        Largest number of outcome tuples enumerated.
    random_starts
        Random feasible starts of the rejection probability maximisation.
    max_iter
        Projected gradient iterations per start.
    step_tol
        Step length under which a projected gradient search has converged.
    max_vertex_combinations
        Row combinations examined to find the vertices of the null polytope
        used as starts.
    statistic_tol
        Relative tolerance of the strict comparison :math:`T > t`, outcome
        tuples whose statistic equals :math:`t` up to rounding are not
        rejected.
    seed
        Seed of the random starts.
    """

    enumeration_budget: int = DEFAULT_ENUMERATION_BUDGET
    random_starts: int = 32
    max_iter: int = 200
    step_tol: float = 1e-8
    max_vertex_combinations: int = 10000
    statistic_tol: float = DEFAULT_STATISTIC_TOLERANCE
    seed: int = 0


@dataclass(frozen=True)
class RestrictedFit:
    """
    Define the restricted maximum likelihood estimate.

    Parameters
    ----------
    system
        Null hypothesis inequality system.
    p_star
        Restricted estimate in canonical edge coordinates.
    active_constraints
        Rows of the system inequality matrix binding at the estimate, see
        :attr:`partial_ranking.ConstraintSystem.inequalities`.
    objective
        Weighted squared distance :math:`\\sum_e n_e (\\hat{p}_e - p^*_e)^2`.
    """

    system: ConstraintSystem = field(repr=False)
    p_star: NDArrayFloat
    active_constraints: tuple[int, ...]
    objective: float

    @property
    def directed(self) -> NDArrayFloat:
        """Restricted estimate over the boundary directed edges."""

        return self.system.directed_values(self.p_star)


@dataclass(frozen=True)
class TestOutcome:
    """
    Define the outcome of a test of the hypothesis that a ranking is
    consistent with the data.

    Parameters
    ----------
    ranking
        Tested ranking.
    statistic
        Likelihood ratio statistic :math:`T`.
    p_value
        P-value.
    method
        P-value method.
    alpha
        Test level.
    reject
        Whether the p-value is smaller than or equal to the level.
    diagnostics
        Optimiser or simulation metadata.
    """

    __test__ = False

    ranking: Ranking
    statistic: float
    p_value: float
    method: LiteralMethod
    alpha: float
    reject: bool
    diagnostics: dict[str, Any] = field(default_factory=dict)


def unrestricted_mle(data: OutcomeData) -> ProbabilityAssignment:
    """
    Return the unrestricted maximum likelihood estimate: the per-edge sample
    mean of the lower-indexed team wins, estimates may reach 0 or 1.

    Examples
    --------
    >>> graph = TournamentGraph(3, [(1, 2), (2, 3)])
    >>> data = OutcomeData(graph, [9, 2], [8, 2])
    >>> unrestricted_mle(data).p.tolist()
    [0.8888888888888888, 1.0]
    """

    return ProbabilityAssignment(data.graph, data.w / data.n, strict=False)


def _as_estimate(p_hat: ProbabilityAssignment | ArrayLike) -> NDArrayFloat:
    """Return given estimate in canonical edge coordinates."""

    if isinstance(p_hat, ProbabilityAssignment):
        return np.asarray(p_hat.p, dtype=np.float64)

    return np.asarray(p_hat, dtype=np.float64)


def restricted_mle(
    p_hat: ProbabilityAssignment | ArrayLike,
    n: ArrayLike,
    system: ConstraintSystem,
    method: Literal["active_set", "minmax"] = "active_set",
) -> RestrictedFit:
    """
    Return the restricted maximum likelihood estimate: the weighted least
    squares projection of the unrestricted estimate onto the null polytope.

    Parameters
    ----------
    p_hat
        Unrestricted estimate.
    n
        Games per edge, the projection weights.
    system
        Null hypothesis inequality system.
    method
        Exact active-set projection or, for rankings without ties, the
        min-max isotonic formula capped at one half.

    Returns
    -------
    :class:`partial_ranking.RestrictedFit`
        Restricted estimate.

    Raises
    ------
    DataError
        If the weights are not positive or the min-max formula is requested
        for a ranking with ties.

    Examples
    --------
    >>> graph = TournamentGraph(3, [(1, 2), (2, 3)])
    >>> system = build_constraint_system(graph, Ranking((2, 1, 3)))
    >>> fit = restricted_mle([8 / 9, 1], [9, 2], system)
    >>> np.round(fit.directed, 12).tolist()
    [0.5, 0.0]
    """

    p_hat = _as_estimate(p_hat)
    weights = np.asarray(n, dtype=np.float64)

    if p_hat.shape != (system.graph.n_edges,) or weights.shape != p_hat.shape:
        msg = (
            f"Estimate and weights must have one value per edge, expected "
            f"{system.graph.n_edges}!"
        )
        raise DataError(msg)

    if np.any(weights <= 0):
        msg = f"Weights must be positive, got {weights}!"
        raise DataError(msg)

    G, h = system.inequalities

    def binding(x: NDArrayFloat) -> tuple[int, ...]:
        return tuple(int(row) for row in np.flatnonzero(np.abs(G @ x - h) <= 1e-10))

    if system.is_satisfied(p_hat, FEASIBILITY_TOLERANCE):
        return RestrictedFit(system, p_hat, binding(p_hat), 0.0)

    if method == "active_set":
        result = project_onto_polyhedron(
            p_hat, weights, G, h, system.feasible_point()
        )
        p_star = np.clip(result.x, 0, 1)
    elif method == "minmax":
        if system.ranking.has_ties:
            msg = (
                "The min-max formula does not handle rankings with ties, got "
                f'"{system.ranking}"!'
            )
            raise DataError(msg)

        position = {edge: i for i, edge in enumerate(system.boundary)}
        slots = [system.edge_index[edge] for edge in system.boundary]
        fitted = minmax_isotonic(
            system.directed_values(p_hat),
            [weights[index] for index, _reversed in slots],
            [(position[lower], position[upper]) for lower, upper in system.order],
            cap=0.5,
        )
        p_star = np.empty_like(p_hat)
        for (index, reversed_), value in zip(slots, fitted):
            p_star[index] = 1 - value if reversed_ else value
    else:
        msg = (
            f'"{method}" method is invalid, it must be one of "active_set", '
            '"minmax"!'
        )
        raise DataError(msg)

    objective = float(np.sum(weights * (p_hat - p_star) ** 2))

    return RestrictedFit(system, p_star, binding(p_star), objective)


def test_statistic(
    p_hat: ProbabilityAssignment | ArrayLike,
    fit: RestrictedFit | ArrayLike,
    n: ArrayLike,
) -> float:
    """
    Return the likelihood ratio statistic
    :math:`T = 2 \\sum_e n_e [\\hat{p}_e \\ln(\\hat{p}_e / p^*_e) +
    (1 - \\hat{p}_e) \\ln((1 - \\hat{p}_e) / (1 - p^*_e))]` in natural
    logarithms, terms with a null numerator or denominator being zero.

    Examples
    --------
    >>> round(test_statistic([8 / 9, 1], [0.5, 1], [9, 2]), 4)
    6.1977
    """

    p_hat = _as_estimate(p_hat)
    p_star = fit.p_star if isinstance(fit, RestrictedFit) else _as_estimate(fit)
    n = np.asarray(n, dtype=np.float64)

    def term(x: NDArrayFloat, y: NDArrayFloat) -> NDArrayFloat:
        return np.where(y > 0, rel_entr(x, np.where(y > 0, y, 1)), 0)

    divergence = term(p_hat, p_star) + term(1 - p_hat, 1 - p_star)

    return float(max(2 * np.sum(n * divergence), 0.0))


test_statistic.__test__ = False  # pyright: ignore


def _statistic(system: ConstraintSystem, n: NDArrayInt, wins: NDArrayInt) -> float:
    """Return the statistic of given wins."""

    p_hat = wins / n
    if system.is_satisfied(p_hat, FEASIBILITY_TOLERANCE):
        return 0.0

    return test_statistic(p_hat, restricted_mle(p_hat, n, system), n)


def strict_threshold(
    t: float, tolerance: float = DEFAULT_STATISTIC_TOLERANCE
) -> float:
    """
    Return the threshold of the strict comparison :math:`T > t` of the
    rejection region.

    Statistics equal to ``t`` up to the relative ``tolerance`` are not
    rejected. The statistic is nonnegative, a non-positive ``t`` has every
    outcome in the region and a threshold of :math:`-\\infty`.

    Examples
    --------
    >>> strict_threshold(0.0), strict_threshold(-1e-12)
    (-inf, -inf)
    >>> strict_threshold(2.0) > 2.0
    True
    """

    if t <= 0:
        return -np.inf

    return t + tolerance * max(1.0, abs(t))


def enumerate_outcomes(
    n: ArrayLike, budget: int = DEFAULT_ENUMERATION_BUDGET
) -> NDArrayInt:
    """
    Return every outcome tuple: one row per combination of win counts
    :math:`0 \\leq i_e \\leq n_e`.

    Raises
    ------
    EnumerationBudgetError
        If there are more than ``budget`` tuples.

    Examples
    --------
    >>> enumerate_outcomes([1, 2]).tolist()
    [[0, 0], [0, 1], [0, 2], [1, 0], [1, 1], [1, 2]]
    """

    n = np.asarray(n, dtype=np.int64)
    count = int(np.prod(n + 1, dtype=object))
    if count > budget:
        msg = (
            f"{count} outcome tuples exceed the enumeration budget of {budget}, "
            "use the asymptotic p-value!"
        )
        raise EnumerationBudgetError(msg)

    grids = np.meshgrid(*[np.arange(games + 1) for games in n], indexing="ij")

    return np.stack([grid.ravel() for grid in grids], axis=-1).astype(np.int64)


def region_probability(
    p: ArrayLike,
    n: ArrayLike,
    outcomes: NDArrayInt,
    region: NDArrayBoolean | None = None,
) -> float:
    """
    Return the probability of given rejection region: the sum over its
    outcome tuples of the products of the per-edge binomial probabilities.

    Parameters
    ----------
    p
        Win probabilities in canonical edge coordinates.
    n
        Games per edge.
    outcomes
        Outcome tuples.
    region
        Rejection region mask over the outcome tuples, all of them by
        default.

    Examples
    --------
    >>> outcomes = enumerate_outcomes([9, 2])
    >>> region = (outcomes[:, 0] == 9) & (outcomes[:, 1] == 2)
    >>> round(region_probability([0.5, 0.5], [9, 2], outcomes, region), 8)
    0.00048828
    """

    if region is not None:
        outcomes = outcomes[region]

    probabilities = binom.pmf(outcomes, np.asarray(n), np.asarray(p))

    return float(np.sum(np.prod(probabilities, axis=1)))


def region_probability_gradient(
    p: ArrayLike,
    n: ArrayLike,
    outcomes: NDArrayInt,
    region: NDArrayBoolean | None = None,
) -> NDArrayFloat:
    """
    Return the gradient of :func:`partial_ranking.region_probability` with
    respect to the win probabilities, using
    :math:`\\partial_p b(i; n, p) = n [b(i - 1; n - 1, p) - b(i; n - 1, p)]`.
    """

    if region is not None:
        outcomes = outcomes[region]

    n = np.asarray(n)
    p = np.asarray(p)
    probabilities = binom.pmf(outcomes, n, p)
    derivatives = n * (
        binom.pmf(outcomes - 1, n - 1, p) - binom.pmf(outcomes, n - 1, p)
    )

    ones = np.ones((outcomes.shape[0], 1))
    left = np.cumprod(np.hstack([ones, probabilities[:, :-1]]), axis=1)
    right = np.cumprod(np.hstack([ones, probabilities[:, :0:-1]]), axis=1)[:, ::-1]

    return np.sum(derivatives * left * right, axis=0)


@dataclass(frozen=True)
class FiniteSamplePValue:
    """
    Define the finite sample p-value and its maximisation diagnostics.

    Parameters
    ----------
    p_value
        Largest rejection probability found over the null polytope, a lower
        bound of the supremum when the maximisation did not converge.
    argmax
        Win probabilities achieving it, in canonical edge coordinates.
    converged
        Whether the search producing the best value converged.
    region_size
        Outcome tuples in the rejection region.
    n_outcomes
        Outcome tuples enumerated.
    n_starts
        Starts of the maximisation.
    """

    p_value: float
    argmax: NDArrayFloat
    converged: bool
    region_size: int
    n_outcomes: int
    n_starts: int = 0


class FiniteSampleNull:
    """
    Define the finite sample null distribution of the statistic for a
    ranking and a design: the statistic of every outcome tuple, computed
    once, and the p-values of the thresholds queried so far.

    Parameters
    ----------
    system
        Null hypothesis inequality system.
    n
        Games per edge.
    options
        Finite sample p-value options.

    Raises
    ------
    EnumerationBudgetError
        If the outcome tuples exceed the enumeration budget.
    """

    def __init__(
        self,
        system: ConstraintSystem,
        n: ArrayLike,
        options: FiniteSampleOptions | None = None,
    ) -> None:
        self._system = system
        self._n = np.asarray(n, dtype=np.int64)
        self._options = options or FiniteSampleOptions()
        self._cache: dict[int, FiniteSamplePValue] = {}

        if self._n.shape != (system.graph.n_edges,) or np.any(self._n < 1):
            msg = "Games must be positive for every edge!"
            raise DataError(msg)

        G, h = system.inequalities
        m = system.graph.n_edges
        self._G = np.vstack([G, np.eye(m), -np.eye(m)])
        self._h = np.concatenate([h, np.ones(m), np.zeros(m)])
        self._origin = system.feasible_point()

    @property
    def system(self) -> ConstraintSystem:
        """Null hypothesis inequality system."""

        return self._system

    @cached_property
    def outcomes(self) -> NDArrayInt:
        """Every outcome tuple."""

        return enumerate_outcomes(self._n, self._options.enumeration_budget)

    @cached_property
    def statistics(self) -> NDArrayFloat:
        """Statistic of every outcome tuple."""

        LOGGER.debug(
            'Computing the statistic of %s outcome tuples for ranking "%s".',
            len(self.outcomes),
            self._system.ranking,
        )

        return np.array(
            [_statistic(self._system, self._n, wins) for wins in self.outcomes]
        )

    @cached_property
    def _sorted_statistics(self) -> NDArrayFloat:
        """Sorted statistics."""

        return np.sort(self.statistics)

    def _threshold(self, t: float) -> float:
        """Return the threshold of the strict comparison with ``t``."""

        return strict_threshold(t, self._options.statistic_tol)

    def region(self, t: float) -> NDArrayBoolean:
        """Return the rejection region :math:`T > t` over the outcomes."""

        return self.statistics > self._threshold(t)

    def _project(self, x: NDArrayFloat) -> NDArrayFloat:
        """Project given point onto the null polytope within the unit box."""

        return project_onto_polyhedron(
            x, np.ones_like(x), self._G, self._h, self._origin
        ).x

    def _starts(self) -> list[NDArrayFloat]:
        """Return the maximisation starts."""

        starts = polyhedron_vertices(
            self._G,
            self._h,
            max_combinations=self._options.max_vertex_combinations,
        )
        starts.append(np.full(self._system.graph.n_edges, 0.5))
        starts.append(self._origin)

        rng = np.random.default_rng(self._options.seed)
        for _ in range(self._options.random_starts):
            starts.append(self._project(rng.uniform(size=self._system.graph.n_edges)))

        return starts

    def _ascend(
        self, start: NDArrayFloat, outcomes: NDArrayInt
    ) -> tuple[NDArrayFloat, float, bool]:
        """
        Maximise the rejection probability from given start by projected
        gradient ascent with backtracking.
        """

        x = start
        value = region_probability(x, self._n, outcomes)
        step = 0.1
        for _ in range(self._options.max_iter):
            gradient = region_probability_gradient(x, self._n, outcomes)
            scale = np.max(np.abs(gradient))
            if scale == 0:
                return x, value, True

            direction = gradient / scale
            while True:
                candidate = self._project(x + step * direction)
                candidate_value = region_probability(candidate, self._n, outcomes)
                if candidate_value >= value:
                    break

                step /= 2
                if step < self._options.step_tol:
                    return x, value, True

            move = np.max(np.abs(candidate - x))
            x, value = candidate, candidate_value
            if move <= self._options.step_tol:
                return x, value, True

            step = min(step * 2, 1.0)

        return x, value, False

    def pvalue(self, t: float) -> FiniteSamplePValue:
        """
        Return the finite sample p-value
        :math:`\\sup_p P_p(T > t)` over the null polytope.

        Examples
        --------
        >>> graph = TournamentGraph(2, [(1, 2)])
        >>> system = build_constraint_system(graph, Ranking((2, 1)))
        >>> null = FiniteSampleNull(system, [3])
        >>> null.pvalue(np.inf).p_value, null.pvalue(-1).p_value
        (0.0, 1.0)
        """

        key = int(
            np.searchsorted(self._sorted_statistics, self._threshold(t), side="right")
        )
        if key in self._cache:
            LOGGER.debug("Finite sample p-value cache hit for t=%.6g.", t)
            return self._cache[key]

        n_outcomes = len(self.outcomes)
        region_size = n_outcomes - key
        if region_size == 0 or key == 0:
            result = FiniteSamplePValue(
                float(region_size > 0), self._origin, True, region_size, n_outcomes
            )
            self._cache[key] = result
            return result

        outcomes = self.outcomes[self.region(t)]
        starts = self._starts()
        best = (self._origin, -np.inf, False)
        for start in starts:
            candidate = self._ascend(start, outcomes)
            if candidate[1] > best[1]:
                best = candidate

        argmax, value, converged = best
        if not converged:
            warnings.warn(
                f'Finite sample p-value maximisation did not converge for ranking '
                f'"{self._system.ranking}", returning the best value found, '
                f"a lower bound of the supremum.",
                OptimizerWarning,
                stacklevel=2,
            )

        LOGGER.debug(
            "Finite sample p-value %.6g from %s starts over %s of %s outcome "
            "tuples.",
            value,
            len(starts),
            region_size,
            n_outcomes,
        )

        result = FiniteSamplePValue(
            float(min(max(value, 0.0), 1.0)),
            argmax,
            converged,
            region_size,
            n_outcomes,
            len(starts),
        )
        self._cache[key] = result

        return result


class AsymptoticNull:
    """
    Define the asymptotic null distribution of the statistic for a ranking
    and a design: statistics simulated with every edge fair, the least
    favourable distribution, replication :math:`i` drawing from the
    ``(seed, i)`` stream.

    Parameters
    ----------
    system
        Null hypothesis inequality system.
    n
        Games per edge.
    replications
        Simulated datasets.
    seed
        Master seed.
    statistic_tol
        Relative tolerance of the strict comparison :math:`T > t`, shared
        with the finite sample p-value.
    """

    def __init__(
        self,
        system: ConstraintSystem,
        n: ArrayLike,
        replications: int = DEFAULT_REPLICATIONS_ASYMPTOTIC,
        seed: int = 0,
        statistic_tol: float = DEFAULT_STATISTIC_TOLERANCE,
    ) -> None:
        if replications < 1:
            msg = f"Replications must be positive, got {replications}!"
            raise DataError(msg)

        if seed < 0:
            msg = f"Seed must be non-negative, got {seed}!"
            raise DataError(msg)

        self._system = system
        self._n = np.asarray(n, dtype=np.int64)
        self._replications = replications
        self._seed = seed
        self._statistic_tol = statistic_tol

        if self._n.shape != (system.graph.n_edges,) or np.any(self._n < 1):
            msg = "Games must be positive for every edge!"
            raise DataError(msg)

    @property
    def system(self) -> ConstraintSystem:
        """Null hypothesis inequality system."""

        return self._system

    @property
    def replications(self) -> int:
        """Simulated datasets."""

        return self._replications

    @property
    def seed(self) -> int:
        """Master seed."""

        return self._seed

    @cached_property
    def sample(self) -> NDArrayFloat:
        """Sorted simulated statistics."""

        statistics: dict[bytes, float] = {}
        sample = np.empty(self._replications)
        for i in range(self._replications):
            wins = np.random.default_rng([self._seed, i]).binomial(self._n, 0.5)
            key = wins.tobytes()
            if key not in statistics:
                statistics[key] = _statistic(self._system, self._n, wins)

            sample[i] = statistics[key]

        LOGGER.debug(
            'Simulated %s statistics (%s distinct outcomes) for ranking "%s".',
            self._replications,
            len(statistics),
            self._system.ranking,
        )

        return np.sort(sample)

    def pvalue(self, t: float) -> float:
        """
        Return the fraction of simulated statistics strictly above ``t``, see
        :func:`partial_ranking.strict_threshold`.
        """

        threshold = strict_threshold(t, self._statistic_tol)
        above = self._replications - np.searchsorted(
            self.sample, threshold, side="right"
        )

        return float(above / self._replications)


def pvalue_finite_sample(
    graph: TournamentGraph,
    n: ArrayLike,
    t: float,
    system: ConstraintSystem,
    options: FiniteSampleOptions | None = None,
) -> tuple[float, NDArrayFloat]:
    """
    Return the exact finite sample p-value
    :math:`\\pi_t = \\sup_p P_p(T > t)` over the null polytope and the win
    probabilities achieving it.

    The rejection region is enumerated explicitly and its probability
    maximised numerically with multi-start projected gradient ascent, global
    optimality is not certified: an
    :class:`partial_ranking.OptimizerWarning` is issued when the best search
    did not converge.

    Parameters
    ----------
    graph
        Tournament graph.
    n
        Games per edge.
    t
        Observed statistic.
    system
        Null hypothesis inequality system.
    options
        Finite sample p-value options.

    Raises
    ------
    EnumerationBudgetError
        If the outcome tuples exceed the enumeration budget.
    """

    if system.graph != graph:
        msg = "Constraint system is not defined on the tournament graph!"
        raise DataError(msg)

    result = FiniteSampleNull(system, n, options).pvalue(t)

    return result.p_value, result.argmax


def pvalue_asymptotic(
    graph: TournamentGraph,
    n: ArrayLike,
    t: float,
    system: ConstraintSystem,
    m: int = DEFAULT_REPLICATIONS_ASYMPTOTIC,
    seed: int = 0,
) -> float:
    """
    Return the asymptotic p-value: the fraction of ``m`` statistics
    simulated with every edge fair that strictly exceed ``t``.

    Examples
    --------
    >>> graph = TournamentGraph(2, [(1, 2)])
    >>> system = build_constraint_system(graph, Ranking((2, 1)))
    >>> pvalue_asymptotic(graph, [10], -1, system, m=100)
    1.0
    """

    if system.graph != graph:
        msg = "Constraint system is not defined on the tournament graph!"
        raise DataError(msg)

    return AsymptoticNull(system, n, m, seed).pvalue(t)


class RankingTester:
    """
    Test rankings against outcome data of a fixed design, caching the
    constraint systems and the null distributions, which only depend on the
    ranking and the games per edge.

    Parameters
    ----------
    graph
        Tournament graph.
    n
        Games per edge.
    method
        P-value method.
    options
        Finite sample p-value options.
    replications
        Simulated datasets of the asymptotic p-value.
    seed
        Seed of the asymptotic p-value simulations.

    Examples
    --------
    >>> graph = TournamentGraph(2, [(1, 2)])
    >>> tester = RankingTester(graph, [50])
    >>> data = OutcomeData(graph, [50], [50])
    >>> tester.test(data, Ranking((2, 1)), 0.1).reject
    True
    """

    def __init__(
        self,
        graph: TournamentGraph,
        n: ArrayLike,
        method: LiteralMethod = "finite_sample",
        options: FiniteSampleOptions | None = None,
        replications: int = DEFAULT_REPLICATIONS_ASYMPTOTIC,
        seed: int = 0,
    ) -> None:
        if method not in METHODS:
            msg = f'"{method}" method is invalid, it must be one of {METHODS}!'
            raise DataError(msg)

        self._graph = graph
        self._n = np.asarray(n, dtype=np.int64)
        self._method: LiteralMethod = method
        self._options = options or FiniteSampleOptions()
        self._replications = replications
        self._seed = seed
        self._systems: dict[Ranking, ConstraintSystem] = {}
        self._nulls: dict[Ranking, FiniteSampleNull | AsymptoticNull] = {}

    @property
    def method(self) -> LiteralMethod:
        """P-value method."""

        return self._method

    def system(self, ranking: Ranking) -> ConstraintSystem:
        """Return the constraint system of given ranking."""

        if ranking not in self._systems:
            self._systems[ranking] = build_constraint_system(self._graph, ranking)

        return self._systems[ranking]

    def null(self, ranking: Ranking) -> FiniteSampleNull | AsymptoticNull:
        """Return the null distribution of given ranking."""

        if ranking not in self._nulls:
            if self._method == "finite_sample":
                self._nulls[ranking] = FiniteSampleNull(
                    self.system(ranking), self._n, self._options
                )
            else:
                self._nulls[ranking] = AsymptoticNull(
                    self.system(ranking),
                    self._n,
                    self._replications,
                    self._seed,
                    self._options.statistic_tol,
                )

        return self._nulls[ranking]

    def _check_data(self, data: OutcomeData) -> None:
        """Validate that given data follow the tester design."""

        if data.graph != self._graph or not np.array_equal(data.n, self._n):
            msg = "Outcome data do not follow the tester design!"
            raise DataError(msg)

    def test(self, data: OutcomeData, ranking: Ranking, alpha: float) -> TestOutcome:
        """
        Test the hypothesis that given ranking is consistent with the data,
        the hypothesis is never rejected when the unrestricted estimate
        satisfies it.

        Raises
        ------
        DataError
            If the level is outside of :math:`(0, 1)` or the data do not
            follow the tester design.
        """

        if not 0 < alpha < 1:
            msg = f'Level "{alpha}" is outside of the (0, 1) range!'
            raise DataError(msg)

        self._check_data(data)

        system = self.system(ranking)
        p_hat = unrestricted_mle(data)
        fit = restricted_mle(p_hat, data.n, system)
        statistic = test_statistic(p_hat, fit, data.n)

        diagnostics: dict[str, Any] = {}
        if statistic == 0:
            p_value = 1.0
            diagnostics["feasible"] = True
        else:
            null = self.null(ranking)
            if isinstance(null, FiniteSampleNull):
                result = null.pvalue(statistic)
                p_value = result.p_value
                diagnostics.update(
                    {
                        "argmax": [float(value) for value in result.argmax],
                        "converged": result.converged,
                        "region_size": result.region_size,
                        "n_outcomes": result.n_outcomes,
                        "n_starts": result.n_starts,
                    }
                )
            else:
                p_value = null.pvalue(statistic)
                diagnostics.update(
                    {"replications": null.replications, "seed": null.seed}
                )

        LOGGER.info(
            'Ranking "%s": statistic %.6g, %s p-value %.6g.',
            ranking,
            statistic,
            self._method,
            p_value,
        )

        return TestOutcome(
            ranking,
            statistic,
            p_value,
            self._method,
            alpha,
            p_value <= alpha,
            diagnostics,
        )

    def confidence_set(
        self,
        data: OutcomeData,
        alpha: float,
        allow_ties: bool = False,
        max_teams: int = MAXIMUM_ENUMERATION_TEAMS,
    ) -> IdentifiedSet:
        """
        Return the confidence set of level :math:`1 - \\alpha`: every ranking
        not rejected by the level :math:`\\alpha` test.
        """

        rankings = tuple(
            ranking
            for ranking in enumerate_rankings(self._graph.q, allow_ties, max_teams)
            if not self.test(data, ranking, alpha).reject
        )

        LOGGER.info(
            "Confidence set of level %s holds %s rankings.", 1 - alpha, len(rankings)
        )

        return IdentifiedSet(self._graph.q, rankings)


def test_ranking(
    data: OutcomeData,
    ranking: Ranking,
    alpha: float = 0.05,
    method: LiteralMethod = "finite_sample",
    options: FiniteSampleOptions | None = None,
    replications: int = DEFAULT_REPLICATIONS_ASYMPTOTIC,
    seed: int = 0,
) -> TestOutcome:
    """
    Test the hypothesis that given ranking is consistent with the data.

    Parameters
    ----------
    data
        Outcome data.
    ranking
        Tested ranking, ties are allowed.
    alpha
        Test level.
    method
        *Finite sample* exact p-value or *asymptotic* simulated p-value.
    options
        Finite sample p-value options.
    replications
        Simulated datasets of the asymptotic p-value.
    seed
        Seed of the asymptotic p-value simulations.

    Returns
    -------
    :class:`partial_ranking.TestOutcome`
        Test outcome.

    Examples
    --------
    >>> graph = TournamentGraph(3, [(1, 2), (2, 3)])
    >>> data = OutcomeData(graph, [9, 2], [8, 2])
    >>> outcome = test_ranking(data, Ranking((1, 2, 3)))
    >>> outcome.statistic, outcome.p_value, outcome.reject
    (0.0, 1.0, False)
    """

    tester = RankingTester(
        data.graph, data.n, method, options, replications, seed
    )

    return tester.test(data, ranking, alpha)


test_ranking.__test__ = False  # pyright: ignore


def confidence_set(
    data: OutcomeData,
    alpha: float = 0.05,
    method: LiteralMethod = "finite_sample",
    allow_ties: bool = False,
    options: FiniteSampleOptions | None = None,
    replications: int = DEFAULT_REPLICATIONS_ASYMPTOTIC,
    seed: int = 0,
    max_teams: int = MAXIMUM_ENUMERATION_TEAMS,
) -> IdentifiedSet:
    """
    Return the confidence set for the ranking by test inversion: every
    ranking not rejected at level :math:`\\alpha`, with its per-team rank
    projections.

    Raises
    ------
    EnumerationBudgetError
        If the team count exceeds ``max_teams``.
    """

    tester = RankingTester(
        data.graph, data.n, method, options, replications, seed
    )

    return tester.confidence_set(data, alpha, allow_ties, max_teams)
