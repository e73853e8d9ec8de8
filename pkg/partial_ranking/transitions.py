"""
Transitions
===========

Define the directed transition counts between entities, e.g.,
employer-to-employer worker moves, and their use as pairwise interactions:

-   :func:`partial_ranking.read_transitions_csv`: Read a transition table.
-   :func:`partial_ranking.transitions_to_outcomes`: Convert transitions into
    outcome data, a move counting as a win of its destination.
-   :func:`partial_ranking.pagerank`: *PageRank* baseline ranking.
"""

from __future__ import annotations

import csv
import logging
import warnings
from collections.abc import Mapping, Sequence
from dataclasses import dataclass
from os import PathLike

import numpy as np
from scipy.sparse import csr_matrix, diags
from typing_extensions import Self

from partial_ranking.core import (
    OutcomeData,
    Ranking,
    TournamentGraph,
    _as_permutation,
    ranks_from_merits,
)
from partial_ranking.exceptions import ConvergenceError, DataError, DataWarning
from partial_ranking.hints import NDArrayFloat, NDArrayInt

__author__ = "Partial Ranking Developers"
__copyright__ = "Copyright 2026 Partial Ranking Developers"
__license__ = "BSD-3-Clause - https://opensource.org/licenses/BSD-3-Clause"
__maintainer__ = "Partial Ranking Developers"
__email__ = "partial-ranking-developers@googlegroups.com"
__status__ = "Production"

__all__ = [
    "DEFAULT_MIN_GAMES",
    "DEFAULT_DAMPING",
    "TransitionTable",
    "read_transitions_csv",
    "transitions_to_outcomes",
    "pagerank_scores",
    "pagerank",
]

LOGGER = logging.getLogger(__name__)

DEFAULT_MIN_GAMES: int = 20
"""Default smallest number of transitions retaining a pair of entities."""

DEFAULT_DAMPING: float = 0.85
"""Default *PageRank* damping factor."""


@dataclass(frozen=True, eq=False)
class TransitionTable:
    """
    Define the directed transition counts between entities.

    Parameters
    ----------
    names
        Entity names, entity :math:`t` being named ``names[t - 1]``.
    counts
        :math:`q \\times q` array whose entry :math:`(i, j)` counts the
        transitions from entity :math:`i + 1` to entity :math:`j + 1`.
    dropped_self_transitions
        Self-transitions dropped when building the table.

    Raises
    ------
    DataError
        If the counts are negative, not square or include self-transitions.
    """

    names: tuple[str, ...]
    counts: NDArrayInt
    dropped_self_transitions: int = 0

    def __post_init__(self) -> None:
        """Validate and freeze the counts."""

        counts = np.array(self.counts, dtype=np.int64)
        q = len(self.names)

        if counts.shape != (q, q):
            msg = f"Transition counts must be a {q}x{q} array, got {counts.shape}!"
            raise DataError(msg)

        if np.any(counts < 0):
            msg = "Transition counts must be non-negative!"
            raise DataError(msg)

        if np.any(np.diag(counts) != 0):
            msg = "Transition counts must not include self-transitions!"
            raise DataError(msg)

        if len(set(self.names)) != q:
            msg = f"Entity names must be unique, got {self.names}!"
            raise DataError(msg)

        counts.setflags(write=False)
        object.__setattr__(self, "names", tuple(self.names))
        object.__setattr__(self, "counts", counts)

    @classmethod
    def from_mapping(cls, counts: Mapping[tuple[str, str], int]) -> Self:
        """
        Build the table from a mapping of ``(from, to)`` entity names to
        counts, entities are numbered by first appearance and
        self-transitions are dropped.

        Examples
        --------
        >>> table = TransitionTable.from_mapping({("F1", "F2"): 30, ("F2", "F1"): 10})
        >>> table.count("F1", "F2"), table.count("F2", "F1")
        (30, 10)
        """

        names: dict[str, int] = {}
        for source, destination in counts:
            names.setdefault(source, len(names))
            names.setdefault(destination, len(names))

        array = np.zeros((len(names), len(names)), dtype=np.int64)
        dropped = 0
        for (source, destination), count in counts.items():
            if source == destination:
                dropped += count
                continue

            array[names[source], names[destination]] += count

        return cls(tuple(names), array, dropped)

    @property
    def q(self) -> int:
        """Number of entities."""

        return len(self.names)

    def entity(self, name: str) -> int:
        """Return the identifier of given entity name."""

        try:
            return self.names.index(name) + 1
        except ValueError as error:
            msg = f'Entity "{name}" is unknown!'
            raise DataError(msg) from error

    def count(self, source: str, destination: str) -> int:
        """Return the transitions from ``source`` to ``destination``."""

        return int(self.counts[self.entity(source) - 1, self.entity(destination) - 1])

    def restrict(self, names: Sequence[str]) -> Self:
        """Return the table restricted to given entities, in given order."""

        indexes = [self.entity(name) - 1 for name in names]

        return type(self)(tuple(names), self.counts[np.ix_(indexes, indexes)])

    def relabel(self, permutation: Sequence[int]) -> Self:
        """
        Return the table with entity :math:`t` renumbered
        ``permutation[t - 1]``.
        """

        permutation = _as_permutation(permutation, self.q)
        order = np.argsort(np.array(permutation) - 1)

        return type(self)(
            tuple(self.names[i] for i in order),
            self.counts[np.ix_(order, order)],
            self.dropped_self_transitions,
        )


def read_transitions_csv(path: str | PathLike[str]) -> TransitionTable:
    """
    Read a transition table from a *CSV* file with a ``from,to,count``
    header, counts of repeated pairs are aggregated and self-transitions are
    dropped with a :class:`partial_ranking.DataWarning`.

    Parameters
    ----------
    path
        *CSV* file path.

    Raises
    ------
    DataError
        If the header is missing or a row is malformed, the message carries
        the file name and line number.
    """

    counts: dict[tuple[str, str], int] = {}
    with open(path, newline="", encoding="utf-8") as file:
        reader = csv.DictReader(file)
        if reader.fieldnames is None or [
            name.strip() for name in reader.fieldnames
        ] != ["from", "to", "count"]:
            msg = f'"{path}": header must be "from,to,count", got {reader.fieldnames}!'
            raise DataError(msg)

        for row in reader:
            line = reader.line_num
            values = [row.get(name) for name in reader.fieldnames]
            if None in values or row.get(None):
                msg = f'"{path}", line {line}: row must have 3 fields!'
                raise DataError(msg)

            source, destination, text = (value.strip() for value in values)
            if not source or not destination:
                msg = f'"{path}", line {line}: entity names must not be empty!'
                raise DataError(msg)

            try:
                count = int(text)
            except ValueError as error:
                msg = f'"{path}", line {line}: count "{text}" is not an integer!'
                raise DataError(msg) from error

            if count < 0:
                msg = f'"{path}", line {line}: count must be non-negative!'
                raise DataError(msg)

            counts[(source, destination)] = counts.get((source, destination), 0) + count

    if not counts:
        msg = f'"{path}": transition table is empty!'
        raise DataError(msg)

    table = TransitionTable.from_mapping(counts)

    if table.dropped_self_transitions:
        warnings.warn(
            f'"{path}": dropped {table.dropped_self_transitions} self-transitions.',
            DataWarning,
            stacklevel=2,
        )

    LOGGER.debug('Read %s entities from "%s".', table.q, path)

    return table


def transitions_to_outcomes(
    table: TransitionTable, min_games: int = DEFAULT_MIN_GAMES
) -> OutcomeData:
    """
    Convert given transition table into outcome data: every pair of entities
    with at least ``min_games`` transitions becomes an edge whose games are
    the transitions in both directions, a move from :math:`i` to :math:`j`
    counting as a win of :math:`j`. Entities without retained pairs are
    dropped.

    Raises
    ------
    DataError
        If ``min_games`` is not positive or no pair is retained.

    Examples
    --------
    >>> table = TransitionTable.from_mapping({("F1", "F2"): 30, ("F2", "F1"): 10})
    >>> data = transitions_to_outcomes(table)
    >>> data.n.tolist(), data.wins(2, 1)
    ([40], 30)
    """

    if min_games < 1:
        msg = f"Minimum games must be positive, got {min_games}!"
        raise DataError(msg)

    counts = table.counts
    totals = counts + counts.T
    pairs = [
        (i, j)
        for i in range(table.q)
        for j in range(i + 1, table.q)
        if totals[i, j] >= min_games
    ]

    if not pairs:
        msg = f"No pair of entities has at least {min_games} transitions!"
        raise DataError(msg)

    retained = sorted({entity for pair in pairs for entity in pair})
    identifiers = {entity: k + 1 for k, entity in enumerate(retained)}

    LOGGER.info(
        "Retained %s pairs between %s of %s entities with at least %s "
        "transitions.",
        len(pairs),
        len(retained),
        table.q,
        min_games,
    )

    graph = TournamentGraph(
        len(retained),
        tuple((identifiers[i], identifiers[j]) for i, j in pairs),
        tuple(table.names[entity] for entity in retained),
    )

    return OutcomeData.from_mapping(
        graph,
        {
            (identifiers[i], identifiers[j]): (int(totals[i, j]), int(counts[j, i]))
            for i, j in pairs
        },
    )


def pagerank_scores(
    table: TransitionTable,
    damping: float = DEFAULT_DAMPING,
    tol: float = 1e-12,
    max_iter: int = 1000,
) -> NDArrayFloat:
    """
    Return the *PageRank* scores of the entities by power iteration on the
    transition matrix, the destination of a transition receiving the score
    mass and entities without outgoing transitions redistributing theirs
    uniformly.

    Parameters
    ----------
    table
        Transition table.
    damping
        Damping factor in :math:`(0, 1)`.
    tol
        Convergence tolerance on the :math:`L^1` norm of the update.
    max_iter
        Maximum iterations.

    Raises
    ------
    DataError
        If the table has no transitions or the damping factor is invalid.
    ConvergenceError
        If the power iteration does not converge.

    Examples
    --------
    >>> table = TransitionTable.from_mapping({("F1", "F2"): 5, ("F2", "F1"): 5})
    >>> np.round(pagerank_scores(table), 6).tolist()
    [0.5, 0.5]
    """

    if not 0 < damping < 1:
        msg = f'Damping factor "{damping}" is outside of the (0, 1) range!'
        raise DataError(msg)

    if table.q == 0 or not np.any(table.counts):
        msg = "Transition table has no transitions!"
        raise DataError(msg)

    q = table.q
    matrix = csr_matrix(table.counts, dtype=np.float64)
    out_degree = np.asarray(matrix.sum(axis=1)).ravel()
    dangling = out_degree == 0
    inverse = np.where(dangling, 0, 1 / np.where(dangling, 1, out_degree))
    transition = (diags(inverse) @ matrix).T.tocsr()

    x = np.full(q, 1 / q)
    for iteration in range(1, max_iter + 1):
        previous = x
        x = (
            damping * (transition @ previous + previous[dangling].sum() / q)
            + (1 - damping) / q
        )
        x /= x.sum()
        if np.abs(x - previous).sum() < tol:
            LOGGER.debug("PageRank converged in %s iterations.", iteration)
            return x

    msg = f"PageRank power iteration did not converge in {max_iter} iterations!"
    raise ConvergenceError(msg)


def pagerank(
    table: TransitionTable,
    damping: float = DEFAULT_DAMPING,
    tol: float = 1e-12,
    max_iter: int = 1000,
) -> Ranking:
    """
    Return the ranking of the entities by decreasing *PageRank* score, equal
    scores to 12 decimals sharing their rank.

    Examples
    --------
    >>> table = TransitionTable.from_mapping(
    ...     {("F2", "F1"): 5, ("F3", "F1"): 5, ("F4", "F1"): 5}
    ... )
    >>> pagerank(table).r
    (2, 1, 2, 2)
    """

    scores = pagerank_scores(table, damping, tol, max_iter)

    return ranks_from_merits(-np.round(scores, 12))
