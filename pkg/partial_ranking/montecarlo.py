"""
Monte Carlo
===========

Define the simulation harness measuring the coverage of confidence sets for
rankings and the size and power of the tests:

-   :func:`partial_ranking.simulate_tournament`: Binomial outcome data.
-   :func:`partial_ranking.run_experiment`: Per-team rank frequencies of the
    confidence sets over replications.
-   :func:`partial_ranking.rejection_rate`: Rejection frequency of a ranking.

Replication :math:`i` draws from the stream seeded with ``(seed, i)`` so that
the results do not depend on the number of workers.
"""

from __future__ import annotations

import logging
from collections import Counter
from collections.abc import Callable, Sequence
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import cached_property

import numpy as np

from partial_ranking.core import (
    OutcomeData,
    ProbabilityAssignment,
    Ranking,
    TournamentGraph,
)
from partial_ranking.exceptions import DataError
from partial_ranking.hints import (
    ArrayLike,
    LiteralMethod,
    NDArrayFloat,
    NDArrayInt,
)
from partial_ranking.ident import IdentifiedSet, identified_set
from partial_ranking.inference import (
    DEFAULT_REPLICATIONS_ASYMPTOTIC,
    METHODS,
    FiniteSampleOptions,
    RankingTester,
)

__author__ = "Partial Ranking Developers"
__copyright__ = "Copyright 2026 Partial Ranking Developers"
__license__ = "BSD-3-Clause - https://opensource.org/licenses/BSD-3-Clause"
__maintainer__ = "Partial Ranking Developers"
__email__ = "partial-ranking-developers@googlegroups.com"
__status__ = "Production"

__all__ = [
    "DEFAULT_REPLICATIONS_EXPERIMENT",
    "ExperimentConfig",
    "RankFrequencyTable",
    "simulate_tournament",
    "run_experiment",
    "rejection_rate",
]

LOGGER = logging.getLogger(__name__)

DEFAULT_REPLICATIONS_EXPERIMENT: int = 1000
"""Default replications of an experiment."""

Seed = int | Sequence[int] | np.random.SeedSequence | np.random.Generator


def simulate_tournament(
    p: ProbabilityAssignment,
    graph: TournamentGraph,
    n_per_edge: int | ArrayLike,
    seed: Seed = 0,
) -> OutcomeData:
    """
    Simulate outcome data: per edge, the wins of the lower-indexed team are
    binomial with given games and win probability.

    Parameters
    ----------
    p
        Win probabilities.
    graph
        Tournament graph.
    n_per_edge
        Games per edge, a scalar applies to every edge.
    seed
        Seed, seed sequence or generator.

    Examples
    --------
    >>> graph = TournamentGraph(2, [(1, 2)])
    >>> p = ProbabilityAssignment(graph, [1 - 1e-12])
    >>> simulate_tournament(p, graph, 10, seed=1).w.tolist()
    [10]
    """

    if p.graph != graph:
        msg = "Probability assignment is not defined on the tournament graph!"
        raise DataError(msg)

    n = np.broadcast_to(np.asarray(n_per_edge, dtype=np.int64), (graph.n_edges,))
    if np.any(n < 1):
        msg = f"Games per edge must be positive, got {n_per_edge}!"
        raise DataError(msg)

    rng = np.random.default_rng(seed)

    return OutcomeData(graph, n.copy(), rng.binomial(n, p.p))


@dataclass(frozen=True)
class ExperimentConfig:
    """
    Define a Monte Carlo experiment measuring the confidence sets for the
    ranking of a data generating process.

    Parameters
    ----------
    graph
        Tournament graph.
    p
        Win probabilities of the data generating process.
    games_per_edge
        Games :math:`N` played on every edge.
    replications
        Simulated datasets.
    alpha
        Test level.
    method
        P-value method.
    seed
        Master seed, replication :math:`i` uses the ``(seed, i)`` stream.
    allow_ties
        Whether the confidence sets consider rankings with ties.
    workers
        Worker processes, the results do not depend on it.
    options
        Finite sample p-value options.
    asymptotic_replications
        Simulated datasets of the asymptotic p-value.
    null_seed
        Seed of the asymptotic p-value simulations, defaults to ``seed + 1``.
    """

    graph: TournamentGraph
    p: ProbabilityAssignment
    games_per_edge: int
    replications: int = DEFAULT_REPLICATIONS_EXPERIMENT
    alpha: float = 0.1
    method: LiteralMethod = "finite_sample"
    seed: int = 0
    allow_ties: bool = False
    workers: int = 1
    options: FiniteSampleOptions = field(default_factory=FiniteSampleOptions)
    asymptotic_replications: int = DEFAULT_REPLICATIONS_ASYMPTOTIC
    null_seed: int | None = None

    def __post_init__(self) -> None:
        """Validate the configuration."""

        if self.p.graph != self.graph:
            msg = "Probability assignment is not defined on the tournament graph!"
            raise DataError(msg)

        for name in (
            "games_per_edge",
            "replications",
            "workers",
            "asymptotic_replications",
        ):
            if getattr(self, name) < 1:
                msg = f'"{name}" must be positive, got {getattr(self, name)}!'
                raise DataError(msg)

        if not 0 < self.alpha < 1:
            msg = f'Level "{self.alpha}" is outside of the (0, 1) range!'
            raise DataError(msg)

        if self.method not in METHODS:
            msg = f'"{self.method}" method is invalid, it must be one of {METHODS}!'
            raise DataError(msg)

        if self.seed < 0:
            msg = f"Seed must be non-negative, got {self.seed}!"
            raise DataError(msg)

    @property
    def n(self) -> NDArrayInt:
        """Games per edge."""

        return np.full(self.graph.n_edges, self.games_per_edge, dtype=np.int64)

    def tester(self) -> RankingTester:
        """Return the ranking tester of the experiment design."""

        return RankingTester(
            self.graph,
            self.n,
            self.method,
            self.options,
            self.asymptotic_replications,
            self.seed + 1 if self.null_seed is None else self.null_seed,
        )


@dataclass(frozen=True, eq=False)
class RankFrequencyTable:
    """
    Define the per-team rank frequencies of the confidence sets of an
    experiment.

    Parameters
    ----------
    frequencies
        :math:`q \\times q` array whose entry :math:`(\\ell, k)` is the
        frequency of rank :math:`k + 1` in the confidence set projection of
        team :math:`\\ell + 1`.
    replications
        Replications.
    set_sizes
        Confidence set cardinality per replication.
    ranking_coverage
        Inclusion frequency of every ranking of the population identified
        set.
    projection_counts
        Per team, the number of replications with each projected rank set.
    """

    frequencies: NDArrayFloat
    replications: int
    set_sizes: tuple[int, ...] = ()
    ranking_coverage: dict[Ranking, float] = field(default_factory=dict)
    projection_counts: dict[int, dict[tuple[int, ...], int]] = field(
        default_factory=dict
    )

    @property
    def q(self) -> int:
        """Number of teams."""

        return self.frequencies.shape[0]

    @cached_property
    def standard_errors(self) -> NDArrayFloat:
        """Monte Carlo standard errors of the frequencies."""

        return np.sqrt(self.frequencies * (1 - self.frequencies) / self.replications)

    @property
    def mean_set_size(self) -> float:
        """Average confidence set cardinality."""

        return float(np.mean(self.set_sizes)) if self.set_sizes else 0.0

    def projection_frequency(self, team: int, ranks: Sequence[int]) -> float:
        """
        Return the frequency of the projected rank set of given team being
        exactly ``ranks``.
        """

        counts = self.projection_counts.get(team, {})

        return counts.get(tuple(sorted(ranks)), 0) / self.replications


def _confidence_sets(
    config: ExperimentConfig, indexes: Sequence[int]
) -> list[tuple[Ranking, ...]]:
    """Return the confidence sets of given replications."""

    # TODO: Share the null distributions between the worker processes, every
    # chunk currently rebuilds them.
    tester = config.tester()
    sets = []
    for i in indexes:
        data = simulate_tournament(
            config.p, config.graph, config.games_per_edge, [config.seed, i]
        )
        sets.append(
            tester.confidence_set(data, config.alpha, config.allow_ties).rankings
        )

    return sets


def _rejections(
    config: ExperimentConfig, ranking: Ranking, indexes: Sequence[int]
) -> list[bool]:
    """Return whether given ranking is rejected in given replications."""

    tester = config.tester()
    rejections = []
    for i in indexes:
        data = simulate_tournament(
            config.p, config.graph, config.games_per_edge, [config.seed, i]
        )
        rejections.append(tester.test(data, ranking, config.alpha).reject)

    return rejections


def _chunks(replications: int, workers: int) -> list[range]:
    """Split the replication indexes into contiguous chunks."""

    bounds = np.linspace(0, replications, workers + 1).astype(int)

    return [range(start, stop) for start, stop in zip(bounds[:-1], bounds[1:])]


def _map_replications(
    function: Callable[..., list], config: ExperimentConfig, *args: Ranking
) -> list:
    """Map given function over the replication chunks, in index order."""

    chunks = _chunks(config.replications, config.workers)
    if config.workers == 1:
        return function(config, *args, chunks[0])

    results = []
    with ProcessPoolExecutor(max_workers=config.workers) as executor:
        futures = [
            executor.submit(function, config, *args, chunk) for chunk in chunks
        ]
        for future in futures:
            results.extend(future.result())

    return results


def run_experiment(config: ExperimentConfig) -> RankFrequencyTable:
    """
    Run given experiment: per replication, simulate outcome data, build the
    confidence set for the ranking and project it on every team.

    Parameters
    ----------
    config
        Experiment configuration.

    Returns
    -------
    :class:`partial_ranking.RankFrequencyTable`
        Per-team rank frequencies.

    Examples
    --------
    >>> graph = TournamentGraph(2, [(1, 2)])
    >>> p = ProbabilityAssignment(graph, [0.9])
    >>> config = ExperimentConfig(graph, p, 20, replications=1)
    >>> run_experiment(config).frequencies.tolist()
    [[1.0, 0.0], [0.0, 1.0]]
    """

    q = config.graph.q
    population = identified_set(config.p, config.graph, config.allow_ties)

    LOGGER.info(
        "Running %s replications with %s games per edge (%s method, %s workers).",
        config.replications,
        config.games_per_edge,
        config.method,
        config.workers,
    )

    counts = np.zeros((q, q))
    coverage = Counter()
    projections: dict[int, Counter] = {team: Counter() for team in range(1, q + 1)}
    sizes = []
    for rankings in _map_replications(_confidence_sets, config):
        confidence = IdentifiedSet(q, rankings)
        sizes.append(len(confidence))
        for team, ranks in confidence.per_team.items():
            for rank in ranks:
                counts[team - 1, rank - 1] += 1

            projections[team][tuple(sorted(ranks))] += 1

        for ranking in population:
            coverage[ranking] += ranking in confidence

    return RankFrequencyTable(
        counts / config.replications,
        config.replications,
        tuple(sizes),
        {
            ranking: coverage[ranking] / config.replications
            for ranking in population
        },
        {team: dict(counter) for team, counter in projections.items()},
    )


def rejection_rate(
    p: ProbabilityAssignment,
    graph: TournamentGraph,
    n_per_edge: int,
    ranking: Ranking,
    alpha: float = 0.1,
    method: LiteralMethod = "asymptotic",
    replications: int = DEFAULT_REPLICATIONS_EXPERIMENT,
    seed: int = 0,
    options: FiniteSampleOptions | None = None,
    asymptotic_replications: int = DEFAULT_REPLICATIONS_ASYMPTOTIC,
    workers: int = 1,
) -> float:
    """
    Return the frequency with which given ranking is rejected over simulated
    datasets.

    Raises
    ------
    DataError
        If the replications are not positive.

    Examples
    --------
    >>> graph = TournamentGraph(2, [(1, 2)])
    >>> p = ProbabilityAssignment(graph, [0.99])
    >>> rejection_rate(p, graph, 50, Ranking((2, 1)), 0.1, "finite_sample", 5)
    1.0
    """

    config = ExperimentConfig(
        graph,
        p,
        n_per_edge,
        replications,
        alpha,
        method,
        seed,
        workers=workers,
        options=options or FiniteSampleOptions(),
        asymptotic_replications=asymptotic_replications,
    )

    rejections = _map_replications(_rejections, config, ranking)

    return float(np.mean(rejections))
