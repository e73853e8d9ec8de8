"""
Tournaments, Merits and Rankings
================================

Define the domain types shared by the identification and inference
machinery:

-   :class:`partial_ranking.TournamentGraph`: Teams and the unordered pairs
    of teams that interacted.
-   :class:`partial_ranking.MeritVector`: Latent merits, smaller is better.
-   :class:`partial_ranking.Ranking`: Weak ordering rank vector.
-   :class:`partial_ranking.OutcomeData`: Per-edge game and win counts.
-   :class:`partial_ranking.ProbabilityAssignment`: Per-edge win
    probabilities.

Teams are 1-based integer identifiers. Every edge is stored canonically as
``(min, max)`` and every per-edge quantity refers to the lower-indexed team,
the reverse orientation being derived on query, e.g., with
:func:`partial_ranking.oriented_prob`.
"""

from __future__ import annotations

import itertools
import logging
import math
from collections.abc import Callable, Iterator, Mapping, Sequence
from dataclasses import dataclass, field
from functools import cached_property

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import connected_components
from typing_extensions import Self

from partial_ranking.exceptions import DataError, EnumerationBudgetError
from partial_ranking.hints import ArrayLike, NDArrayBoolean, NDArrayFloat, NDArrayInt

__author__ = "Partial Ranking Developers"
__copyright__ = "Copyright 2026 Partial Ranking Developers"
__license__ = "BSD-3-Clause - https://opensource.org/licenses/BSD-3-Clause"
__maintainer__ = "Partial Ranking Developers"
__email__ = "partial-ranking-developers@googlegroups.com"
__status__ = "Production"

__all__ = [
    "MAXIMUM_ENUMERATION_TEAMS",
    "TournamentGraph",
    "MeritVector",
    "Ranking",
    "OutcomeData",
    "ProbabilityAssignment",
    "sign",
    "ranks_from_merits",
    "is_valid_ranking",
    "ordered_bell_number",
    "enumerate_rankings",
    "is_connected",
    "diameter_at_most_two",
    "oriented_prob",
    "contract_ties",
    "probabilities_from_function",
]

LOGGER = logging.getLogger(__name__)

MAXIMUM_ENUMERATION_TEAMS: int = 8
"""Default largest team count for which rankings are enumerated."""


def _as_team(value: object, q: int) -> int:
    """Validate and return a team identifier in ``[1, q]``."""

    if isinstance(value, bool) or not isinstance(value, (int, np.integer)):
        msg = f'Team "{value!r}" is not an integer identifier!'
        raise DataError(msg)

    team = int(value)
    if not 1 <= team <= q:
        msg = f'Team "{team}" is outside of the [1, {q}] range!'
        raise DataError(msg)

    return team


def _as_permutation(permutation: Sequence[int], q: int) -> tuple[int, ...]:
    """Validate a 1-based permutation of ``q`` teams."""

    permutation = tuple(int(team) for team in permutation)
    if sorted(permutation) != list(range(1, q + 1)):
        msg = f"{permutation} is not a permutation of teams [1, {q}]!"
        raise DataError(msg)

    return permutation


@dataclass(frozen=True)
class TournamentGraph:
    """
    Define a tournament graph: ``q`` teams and the unordered pairs of teams
    that interacted.

    Parameters
    ----------
    q
        Number of teams.
    edges
        Interacting pairs, in any orientation; they are stored canonically as
        sorted ``(min, max)`` tuples.
    names
        Optional team names, used at the input / output boundary only.

    Raises
    ------
    DataError
        If the graph has self-loops, duplicate edges or unknown teams.

    Examples
    --------
    >>> graph = TournamentGraph(4, [(1, 2), (3, 2), (3, 4)])
    >>> graph.edges
    ((1, 2), (2, 3), (3, 4))
    """

    q: int
    edges: tuple[tuple[int, int], ...] = ()
    names: tuple[str, ...] | None = field(default=None, compare=False)

    def __post_init__(self) -> None:
        """Validate and canonicalise the graph."""

        if isinstance(self.q, bool) or not isinstance(self.q, (int, np.integer)):
            msg = f'Team count "{self.q!r}" is not an integer!'
            raise DataError(msg)

        if self.q < 1:
            msg = f'Team count must be positive, got "{self.q}"!'
            raise DataError(msg)

        canonical = set()
        for edge in self.edges:
            if len(edge) != 2:
                msg = f'Edge "{edge!r}" is not a pair of teams!'
                raise DataError(msg)

            first, second = (_as_team(team, self.q) for team in edge)
            if first == second:
                msg = f'Self-loop on team "{first}" is not allowed!'
                raise DataError(msg)

            pair = (min(first, second), max(first, second))
            if pair in canonical:
                msg = f'Duplicate edge "{pair}"!'
                raise DataError(msg)

            canonical.add(pair)

        object.__setattr__(self, "q", int(self.q))
        object.__setattr__(self, "edges", tuple(sorted(canonical)))

        if self.names is not None:
            names = tuple(str(name) for name in self.names)
            if len(names) != self.q:
                msg = f"{len(names)} team names given for {self.q} teams!"
                raise DataError(msg)

            if len(set(names)) != len(names):
                msg = "Team names must be unique!"
                raise DataError(msg)

            object.__setattr__(self, "names", names)

    @cached_property
    def _edge_indexes(self) -> dict[tuple[int, int], int]:
        """Canonical edge to storage index mapping."""

        return {edge: index for index, edge in enumerate(self.edges)}

    @property
    def n_edges(self) -> int:
        """Number of edges."""

        return len(self.edges)

    @property
    def teams(self) -> range:
        """Team identifiers."""

        return range(1, self.q + 1)

    def team_name(self, team: int) -> str:
        """
        Return the name of given team, its identifier when the graph is
        unnamed.
        """

        team = _as_team(team, self.q)

        return str(team) if self.names is None else self.names[team - 1]

    def has_edge(self, first: int, second: int) -> bool:
        """Return whether given teams interacted."""

        return (min(first, second), max(first, second)) in self._edge_indexes

    def edge_index(self, first: int, second: int) -> tuple[int, bool]:
        """
        Return the storage index of given directed edge and whether it is
        reversed with respect to the canonical orientation.

        Raises
        ------
        DataError
            If the teams did not interact.
        """

        key = (min(first, second), max(first, second))
        index = self._edge_indexes.get(key)
        if index is None:
            msg = f'Teams "{first}" and "{second}" did not interact!'
            raise DataError(msg)

        return index, first > second

    def directed_edges(self) -> tuple[tuple[int, int], ...]:
        """Return every edge in both orientations."""

        return tuple(
            itertools.chain.from_iterable(
                ((first, second), (second, first)) for first, second in self.edges
            )
        )

    def neighbours(self, team: int) -> tuple[int, ...]:
        """Return the opponents of given team, sorted."""

        team = _as_team(team, self.q)

        return tuple(
            sorted(
                second if first == team else first
                for first, second in self.edges
                if team in (first, second)
            )
        )

    def adjacency(self) -> NDArrayBoolean:
        """Return the symmetric :math:`q \\times q` adjacency matrix."""

        adjacency = np.zeros((self.q, self.q), dtype=np.bool_)
        for first, second in self.edges:
            adjacency[first - 1, second - 1] = True
            adjacency[second - 1, first - 1] = True

        return adjacency

    def relabel(self, permutation: Sequence[int]) -> Self:
        """
        Return the graph with team :math:`t` renamed ``permutation[t - 1]``.
        """

        permutation = _as_permutation(permutation, self.q)
        names = None
        if self.names is not None:
            names = [""] * self.q
            for team, name in zip(self.teams, self.names):
                names[permutation[team - 1] - 1] = name

        return type(self)(
            self.q,
            tuple(
                (permutation[first - 1], permutation[second - 1])
                for first, second in self.edges
            ),
            None if names is None else tuple(names),
        )


@dataclass(frozen=True, eq=False)
class MeritVector:
    """
    Define the latent merits of the teams, smaller merits are better.

    Parameters
    ----------
    theta
        Finite merits, one per team.

    Raises
    ------
    DataError
        If the merits are empty or not finite.
    """

    theta: NDArrayFloat

    def __post_init__(self) -> None:
        """Validate and freeze the merits."""

        theta = np.array(self.theta, dtype=np.float64)
        if theta.ndim != 1 or theta.size == 0:
            msg = "Merits must be a non-empty vector!"
            raise DataError(msg)

        if not np.all(np.isfinite(theta)):
            msg = f"Merits must be finite, got {theta}!"
            raise DataError(msg)

        theta.setflags(write=False)
        object.__setattr__(self, "theta", theta)

    @property
    def q(self) -> int:
        """Number of teams."""

        return int(self.theta.size)

    def __eq__(self, other: object) -> bool:
        """Return whether both merit vectors are identical."""

        if not isinstance(other, MeritVector):
            return NotImplemented

        return bool(np.array_equal(self.theta, other.theta))

    __hash__ = None  # pyright: ignore


@dataclass(frozen=True, order=True)
class Ranking:
    """
    Define a ranking, i.e., a weak ordering rank vector where the rank of a
    team is one plus the number of strictly better teams.

    Parameters
    ----------
    r
        Ranks, one per team.

    Raises
    ------
    DataError
        If the vector does not satisfy the ranking validity law.

    Examples
    --------
    >>> Ranking((1, 1, 3)).has_ties
    True
    >>> Ranking.parse("2,1,3")
    Ranking(r=(2, 1, 3))
    """

    r: tuple[int, ...]

    def __post_init__(self) -> None:
        """Validate the ranks."""

        try:
            ranks = tuple(int(rank) for rank in self.r)
        except (TypeError, ValueError) as error:
            msg = f'"{self.r!r}" is not an integer vector!'
            raise DataError(msg) from error

        if not is_valid_ranking(ranks):
            msg = f'"{ranks}" is not a valid ranking!'
            raise DataError(msg)

        object.__setattr__(self, "r", ranks)

    @classmethod
    def _unchecked(cls, ranks: tuple[int, ...]) -> Self:
        """Build a ranking from ranks known to be valid."""

        ranking = object.__new__(cls)
        object.__setattr__(ranking, "r", ranks)

        return ranking

    @classmethod
    def parse(cls, text: str) -> Self:
        """
        Parse a comma separated ranking, e.g., ``"2,1,3"``.

        Raises
        ------
        DataError
            If the text is not a valid ranking.
        """

        try:
            ranks = tuple(int(token) for token in text.split(","))
        except ValueError as error:
            msg = f'"{text}" is not a comma separated list of ranks!'
            raise DataError(msg) from error

        return cls(ranks)

    @property
    def q(self) -> int:
        """Number of teams."""

        return len(self.r)

    @property
    def has_ties(self) -> bool:
        """Whether at least two teams share a rank."""

        return len(set(self.r)) != len(self.r)

    def rank(self, team: int) -> int:
        """Return the rank of given team."""

        return self.r[_as_team(team, self.q) - 1]

    def as_array(self) -> NDArrayInt:
        """Return the ranks as an array."""

        return np.array(self.r, dtype=np.int64)

    def relabel(self, permutation: Sequence[int]) -> Self:
        """
        Return the ranking with team :math:`t` renamed ``permutation[t - 1]``.
        """

        permutation = _as_permutation(permutation, self.q)
        ranks = [0] * self.q
        for team, rank in enumerate(self.r, 1):
            ranks[permutation[team - 1] - 1] = rank

        return type(self)._unchecked(tuple(ranks))

    def __iter__(self) -> Iterator[int]:
        """Iterate over the ranks."""

        return iter(self.r)

    def __len__(self) -> int:
        """Return the number of teams."""

        return len(self.r)

    def __str__(self) -> str:
        """Return the comma separated ranks."""

        return ",".join(str(rank) for rank in self.r)


def _edge_vector(
    graph: TournamentGraph, values: ArrayLike, dtype: type, name: str
) -> np.ndarray:
    """Return given per-edge values as a read-only vector."""

    vector = np.array(values, dtype=dtype)
    if vector.shape != (graph.n_edges,):
        msg = (
            f'"{name}" must have one value per edge, '
            f"expected {graph.n_edges}, got shape {vector.shape}!"
        )
        raise DataError(msg)

    vector.setflags(write=False)

    return vector


@dataclass(frozen=True, eq=False)
class OutcomeData:
    """
    Define the observed outcomes: per canonical edge :math:`(\\ell, k)`, the
    number of games :math:`n` and the number of wins :math:`w` of the
    lower-indexed team :math:`\\ell`.

    Parameters
    ----------
    graph
        Tournament graph.
    n
        Games per edge, aligned with ``graph.edges``.
    w
        Wins of the lower-indexed team per edge, aligned with ``graph.edges``.

    Raises
    ------
    DataError
        If an edge has no games or the wins are outside :math:`[0, n]`.
    """

    graph: TournamentGraph
    n: NDArrayInt
    w: NDArrayInt

    def __post_init__(self) -> None:
        """Validate and freeze the counts."""

        n = _edge_vector(self.graph, self.n, np.int64, "n")
        w = _edge_vector(self.graph, self.w, np.int64, "w")

        if np.any(n < 1):
            msg = "Every edge must have at least one game!"
            raise DataError(msg)

        if np.any(w < 0) or np.any(w > n):
            msg = "Wins must be in the [0, n] range for every edge!"
            raise DataError(msg)

        object.__setattr__(self, "n", n)
        object.__setattr__(self, "w", w)

    @classmethod
    def from_mapping(
        cls,
        graph: TournamentGraph,
        counts: Mapping[tuple[int, int], tuple[int, int]],
    ) -> Self:
        """
        Build the outcome data from a mapping of directed edges
        :math:`(\\ell, k)` to ``(games, wins of \\ell)`` tuples.

        Raises
        ------
        DataError
            If an edge is missing or given twice.
        """

        n = np.zeros(graph.n_edges, dtype=np.int64)
        w = np.zeros(graph.n_edges, dtype=np.int64)
        seen = set()
        for (first, second), (games, wins) in counts.items():
            index, reversed_ = graph.edge_index(first, second)
            if index in seen:
                msg = f'Edge "{graph.edges[index]}" is given twice!'
                raise DataError(msg)

            seen.add(index)
            n[index] = games
            w[index] = games - wins if reversed_ else wins

        if len(seen) != graph.n_edges:
            missing = [edge for i, edge in enumerate(graph.edges) if i not in seen]
            msg = f"Edges {missing} have no outcome data!"
            raise DataError(msg)

        return cls(graph, n, w)

    @property
    def N(self) -> int:
        """Total number of games."""

        return int(self.n.sum())

    def games(self, first: int, second: int) -> int:
        """Return the number of games between given teams."""

        return int(self.n[self.graph.edge_index(first, second)[0]])

    def wins(self, first: int, second: int) -> int:
        """Return the number of wins of team ``first`` against ``second``."""

        index, reversed_ = self.graph.edge_index(first, second)

        return int(self.n[index] - self.w[index] if reversed_ else self.w[index])

    def relabel(self, permutation: Sequence[int]) -> Self:
        """
        Return the outcome data with team :math:`t` renamed
        ``permutation[t - 1]``.
        """

        permutation = _as_permutation(permutation, self.graph.q)

        return type(self).from_mapping(
            self.graph.relabel(permutation),
            {
                (permutation[first - 1], permutation[second - 1]): (
                    int(self.n[i]),
                    int(self.w[i]),
                )
                for i, (first, second) in enumerate(self.graph.edges)
            },
        )


@dataclass(frozen=True, eq=False)
class ProbabilityAssignment:
    """
    Define per canonical edge :math:`(\\ell, k)` the probability that the
    lower-indexed team :math:`\\ell` beats :math:`k`.

    Parameters
    ----------
    graph
        Tournament graph.
    p
        Probabilities, aligned with ``graph.edges``.
    strict
        Whether the probabilities must lie in the open interval
        :math:`(0, 1)`, as population quantities do; estimates may reach the
        closed interval bounds.

    Raises
    ------
    DataError
        If a probability is out of range.

    Examples
    --------
    >>> graph = TournamentGraph(2, [(1, 2)])
    >>> p = ProbabilityAssignment(graph, [0.75])
    >>> float(p.oriented(2, 1))
    0.25
    """

    graph: TournamentGraph
    p: NDArrayFloat
    strict: bool = True

    def __post_init__(self) -> None:
        """Validate and freeze the probabilities."""

        p = _edge_vector(self.graph, self.p, np.float64, "p")

        if self.strict:
            valid = np.all((p > 0) & (p < 1))
        else:
            valid = np.all((p >= 0) & (p <= 1))

        if not valid:
            interval = "(0, 1)" if self.strict else "[0, 1]"
            msg = f"Probabilities must be in the {interval} interval, got {p}!"
            raise DataError(msg)

        object.__setattr__(self, "p", p)

    @classmethod
    def from_mapping(
        cls,
        graph: TournamentGraph,
        probabilities: Mapping[tuple[int, int], float],
        strict: bool = True,
    ) -> Self:
        """
        Build the assignment from a mapping of directed edges
        :math:`(\\ell, k)` to the probability that :math:`\\ell` beats
        :math:`k`.

        Raises
        ------
        DataError
            If an edge is missing or given twice.

        Examples
        --------
        >>> graph = TournamentGraph(3, [(1, 2), (1, 3)])
        >>> p = ProbabilityAssignment.from_mapping(graph, {(1, 2): 0.7, (3, 1): 0.7})
        >>> p.p.tolist()
        [0.7, 0.30000000000000004]
        """

        p = np.zeros(graph.n_edges, dtype=np.float64)
        seen = set()
        for (first, second), probability in probabilities.items():
            index, reversed_ = graph.edge_index(first, second)
            if index in seen:
                msg = f'Edge "{graph.edges[index]}" is given twice!'
                raise DataError(msg)

            seen.add(index)
            p[index] = 1 - probability if reversed_ else probability

        if len(seen) != graph.n_edges:
            missing = [edge for i, edge in enumerate(graph.edges) if i not in seen]
            msg = f"Edges {missing} have no probability!"
            raise DataError(msg)

        return cls(graph, p, strict)

    def oriented(self, first: int, second: int) -> float:
        """Return the probability that team ``first`` beats ``second``."""

        index, reversed_ = self.graph.edge_index(first, second)

        return float(1 - self.p[index] if reversed_ else self.p[index])

    def relabel(self, permutation: Sequence[int]) -> Self:
        """
        Return the assignment with team :math:`t` renamed
        ``permutation[t - 1]``.
        """

        permutation = _as_permutation(permutation, self.graph.q)

        return type(self).from_mapping(
            self.graph.relabel(permutation),
            {
                (permutation[first - 1], permutation[second - 1]): float(self.p[i])
                for i, (first, second) in enumerate(self.graph.edges)
            },
            self.strict,
        )


def sign(x: float) -> int:
    """
    Return the sign of given real number.

    Examples
    --------
    >>> sign(0), sign(0.25), sign(-3)
    (0, 1, -1)
    """

    return int(x > 0) - int(x < 0)


def ranks_from_merits(theta: MeritVector | ArrayLike) -> Ranking:
    """
    Return the ranking implied by given merits: the rank of a team is one plus
    the number of teams with strictly smaller merit.

    Examples
    --------
    >>> ranks_from_merits([0.2, 0.4, 0.5, 0.21])
    Ranking(r=(1, 3, 4, 2))
    >>> ranks_from_merits([1, 1, 1])
    Ranking(r=(1, 1, 1))
    """

    if not isinstance(theta, MeritVector):
        theta = MeritVector(np.asarray(theta))

    values = theta.theta
    ranks = 1 + np.sum(values[:, None] > values[None, :], axis=1)

    return Ranking._unchecked(tuple(int(rank) for rank in ranks))


def is_valid_ranking(r: Sequence[int] | ArrayLike) -> bool:
    """
    Return whether given integer vector satisfies the ranking validity law
    :math:`r_\\ell = 1 + \\#\\{k : r_k < r_\\ell\\}`.

    Examples
    --------
    >>> is_valid_ranking((1, 1, 3)), is_valid_ranking((1, 1, 2))
    (True, False)
    """

    ranks = np.asarray(r)
    if ranks.ndim != 1 or ranks.size == 0:
        return False

    if not np.issubdtype(ranks.dtype, np.integer):
        return False

    expected = 1 + np.sum(ranks[None, :] < ranks[:, None], axis=1)

    return bool(np.array_equal(ranks, expected))


def ordered_bell_number(q: int) -> int:
    """
    Return the ordered *Bell* (*Fubini*) number, i.e., the number of weak
    orderings of ``q`` items.

    Examples
    --------
    >>> [ordered_bell_number(q) for q in range(1, 6)]
    [1, 3, 13, 75, 541]
    """

    numbers = [1]
    for n in range(1, q + 1):
        numbers.append(sum(math.comb(n, k) * numbers[n - k] for k in range(1, n + 1)))

    return numbers[q]


def _ordered_partitions(
    items: tuple[int, ...],
) -> Iterator[list[tuple[int, ...]]]:
    """Yield every ordered set partition of given items."""

    if not items:
        yield []
        return

    for size in range(1, len(items) + 1):
        for block in itertools.combinations(items, size):
            rest = tuple(item for item in items if item not in block)
            for partition in _ordered_partitions(rest):
                yield [block, *partition]


def enumerate_rankings(
    q: int,
    allow_ties: bool = False,
    max_teams: int = MAXIMUM_ENUMERATION_TEAMS,
) -> list[Ranking]:
    """
    Enumerate every ranking of ``q`` teams, sorted lexicographically.

    Parameters
    ----------
    q
        Number of teams.
    allow_ties
        Whether to enumerate weak orderings rather than permutations only.
    max_teams
        Largest team count allowed.

    Returns
    -------
    :class:`list`
        :math:`q!` permutations, or the ordered *Bell* number of weak
        orderings when ``allow_ties`` is set.

    Raises
    ------
    DataError
        If ``q`` is not positive.
    EnumerationBudgetError
        If ``q`` exceeds ``max_teams``.

    Examples
    --------
    >>> len(enumerate_rankings(3)), len(enumerate_rankings(3, allow_ties=True))
    (6, 13)
    """

    if q < 1:
        msg = f'Team count must be positive, got "{q}"!'
        raise DataError(msg)

    if q > max_teams:
        msg = (
            f"Enumerating the rankings of {q} teams exceeds the "
            f"{max_teams} teams cap!"
        )
        raise EnumerationBudgetError(msg)

    if not allow_ties:
        rankings = [
            Ranking._unchecked(permutation)
            for permutation in itertools.permutations(range(1, q + 1))
        ]
    else:
        rankings = []
        for partition in _ordered_partitions(tuple(range(q))):
            ranks = [0] * q
            placed = 0
            for block in partition:
                for team in block:
                    ranks[team] = placed + 1
                placed += len(block)
            rankings.append(Ranking._unchecked(tuple(ranks)))

        rankings.sort()

    LOGGER.debug(
        "Enumerated %s rankings of %s teams (ties: %s).", len(rankings), q, allow_ties
    )

    return rankings


def is_connected(graph: TournamentGraph) -> bool:
    """
    Return whether a single connected component spans every team.

    Examples
    --------
    >>> is_connected(TournamentGraph(4, [(1, 2), (2, 3), (3, 4)]))
    True
    >>> is_connected(TournamentGraph(4, [(1, 2), (3, 4)]))
    False
    """

    n_components, _labels = connected_components(
        csr_matrix(graph.adjacency()), directed=False
    )

    return n_components == 1


def diameter_at_most_two(graph: TournamentGraph) -> bool:
    """
    Return whether every pair of distinct teams is adjacent or shares a common
    opponent.

    Examples
    --------
    >>> diameter_at_most_two(TournamentGraph(4, [(1, 2), (2, 3), (3, 4)]))
    False
    >>> diameter_at_most_two(TournamentGraph(5, [(1, 2), (1, 3), (1, 4), (1, 5)]))
    True
    """

    adjacency = graph.adjacency().astype(np.int64)
    reachable = np.eye(graph.q, dtype=np.int64) + adjacency + adjacency @ adjacency

    return bool(np.all(reachable > 0))


def oriented_prob(p: ProbabilityAssignment, first: int, second: int) -> float:
    """
    Return the probability that team ``first`` beats team ``second``.

    Raises
    ------
    DataError
        If the teams did not interact.

    Examples
    --------
    >>> p = ProbabilityAssignment(TournamentGraph(2, [(1, 2)]), [0.75])
    >>> oriented_prob(p, 1, 2), oriented_prob(p, 2, 1)
    (0.75, 0.25)
    """

    return p.oriented(first, second)


def contract_ties(
    graph: TournamentGraph, ranking: Ranking
) -> tuple[TournamentGraph, Ranking, tuple[int, ...]]:
    """
    Merge the teams sharing a rank into single nodes.

    Parameters
    ----------
    graph
        Tournament graph.
    ranking
        Ranking, possibly with ties.

    Returns
    -------
    :class:`tuple`
        Quotient graph whose nodes are the rank blocks sorted from best to
        worst, the tie-free block ranking and, per team, its block.

    Examples
    --------
    >>> graph = TournamentGraph(3, [(1, 2), (2, 3), (1, 3)])
    >>> quotient, ranking, blocks = contract_ties(graph, Ranking((1, 1, 3)))
    >>> quotient.edges, ranking.r, blocks
    (((1, 2),), (1, 2), (1, 1, 2))
    """

    if ranking.q != graph.q:
        msg = f"Ranking of {ranking.q} teams given for {graph.q} teams!"
        raise DataError(msg)

    levels = sorted(set(ranking.r))
    block_of_rank = {rank: block for block, rank in enumerate(levels, 1)}
    blocks = tuple(block_of_rank[rank] for rank in ranking.r)

    pairs = ((blocks[first - 1], blocks[second - 1]) for first, second in graph.edges)
    edges = {(min(pair), max(pair)) for pair in pairs if pair[0] != pair[1]}

    return (
        TournamentGraph(len(levels), tuple(edges)),
        Ranking._unchecked(tuple(range(1, len(levels) + 1))),
        blocks,
    )


def probabilities_from_function(
    theta: MeritVector | ArrayLike,
    graph: TournamentGraph,
    function: Callable[[float, float], float],
) -> ProbabilityAssignment:
    """
    Forward-generate win probabilities from merits through a two-argument
    function :math:`F(\\theta_\\ell, \\theta_k)` giving the probability that
    :math:`\\ell` beats :math:`k`.

    Raises
    ------
    DataError
        If the merits do not cover every team or a probability falls outside
        :math:`(0, 1)`.
    """

    if not isinstance(theta, MeritVector):
        theta = MeritVector(np.asarray(theta))

    if theta.q != graph.q:
        msg = f"{theta.q} merits given for {graph.q} teams!"
        raise DataError(msg)

    return ProbabilityAssignment(
        graph,
        [
            function(float(theta.theta[first - 1]), float(theta.theta[second - 1]))
            for first, second in graph.edges
        ],
    )
