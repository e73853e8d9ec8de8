"""
Identification
==============

Define the identification analysis of rankings from pairwise interactions:

-   :func:`partial_ranking.build_constraint_system`: Inequality system that
    a ranking imposes on the win probabilities.
-   :func:`partial_ranking.check_membership`,
    :func:`partial_ranking.check_membership_matrix`: Membership of a ranking
    in the nonparametric identified set, through the sign conditions or the
    probability matrix representation.
-   :func:`partial_ranking.identified_set`,
    :func:`partial_ranking.project_rank`: Identified set and its per-team
    projections.
-   :func:`partial_ranking.solve_linear_parametric`: Merits of the linear
    parametric model with known link, e.g., *Bradley-Terry-Luce*.
-   :func:`partial_ranking.check_membership_semiparametric`: Membership in
    the linear semiparametric identified set through linear programming
    feasibility.
"""

from __future__ import annotations

import logging
from collections import defaultdict, deque
from collections.abc import Callable, Iterator, Mapping
from dataclasses import dataclass, field
from functools import cached_property
from typing import Literal

import numpy as np
from scipy.optimize import linprog
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import breadth_first_order
from scipy.special import expit, logit
from scipy.stats import norm

from partial_ranking.core import (
    MAXIMUM_ENUMERATION_TEAMS,
    MeritVector,
    ProbabilityAssignment,
    Ranking,
    TournamentGraph,
    contract_ties,
    enumerate_rankings,
    is_connected,
    sign,
)
from partial_ranking.exceptions import DataError, InconsistentSystemError
from partial_ranking.hints import ArrayLike, NDArrayFloat

__author__ = "Partial Ranking Developers"
__copyright__ = "Copyright 2026 Partial Ranking Developers"
__license__ = "BSD-3-Clause - https://opensource.org/licenses/BSD-3-Clause"
__maintainer__ = "Partial Ranking Developers"
__email__ = "partial-ranking-developers@googlegroups.com"
__status__ = "Production"

__all__ = [
    "LinkFunction",
    "LINK_BTL",
    "LINK_PROBIT",
    "LINK_FUNCTIONS",
    "probabilities_from_merits",
    "ConstraintSystem",
    "IdentifiedSet",
    "build_constraint_system",
    "check_membership",
    "check_membership_matrix",
    "identified_set",
    "project_rank",
    "solve_linear_parametric",
    "semiparametric_witness",
    "check_membership_semiparametric",
]

LOGGER = logging.getLogger(__name__)

DirectedEdge = tuple[int, int]


@dataclass(frozen=True)
class LinkFunction:
    """
    Define a link function :math:`f` of the linear family: the probability
    that team :math:`\\ell` beats team :math:`k` is
    :math:`f(\\theta_k - \\theta_\\ell)`.

    Parameters
    ----------
    name
        Link name.
    forward
        Strictly increasing map from the reals to :math:`(0, 1)` satisfying
        :math:`f(-x) = 1 - f(x)`.
    inverse
        Inverse of ``forward``.
    """

    name: str
    forward: Callable[[ArrayLike], ArrayLike] = field(repr=False)
    inverse: Callable[[ArrayLike], ArrayLike] = field(repr=False)

    def __call__(self, x: ArrayLike) -> ArrayLike:
        """Evaluate the link function."""

        return self.forward(x)


LINK_BTL: LinkFunction = LinkFunction("btl", expit, logit)
"""*Bradley-Terry-Luce* logistic link."""

LINK_PROBIT: LinkFunction = LinkFunction("probit", norm.cdf, norm.ppf)
"""*Thurstone-Mosteller* normal link."""

LINK_FUNCTIONS: dict[str, LinkFunction] = {
    LINK_BTL.name: LINK_BTL,
    LINK_PROBIT.name: LINK_PROBIT,
}
"""Supported link functions."""


def probabilities_from_merits(
    theta: MeritVector | ArrayLike,
    graph: TournamentGraph,
    link: LinkFunction = LINK_BTL,
) -> ProbabilityAssignment:
    """
    Forward-generate the win probabilities of the linear model:
    :math:`p_{\\ell, k} = f(\\theta_k - \\theta_\\ell)`.

    Examples
    --------
    >>> graph = TournamentGraph(2, [(1, 2)])
    >>> probabilities_from_merits([0, 0], graph).p.tolist()
    [0.5]
    """

    if not isinstance(theta, MeritVector):
        theta = MeritVector(np.asarray(theta))

    if theta.q != graph.q:
        msg = f"{theta.q} merits given for {graph.q} teams!"
        raise DataError(msg)

    first = np.array([edge[0] for edge in graph.edges], dtype=np.int64) - 1
    second = np.array([edge[1] for edge in graph.edges], dtype=np.int64) - 1

    return ProbabilityAssignment(
        graph, np.asarray(link.forward(theta.theta[second] - theta.theta[first]))
    )


def _check_ranking(graph: TournamentGraph, ranking: Ranking) -> None:
    """Validate that given ranking covers the graph teams."""

    if not isinstance(ranking, Ranking):
        msg = f'"{ranking!r}" is not a ranking!'
        raise DataError(msg)

    if ranking.q != graph.q:
        msg = f"Ranking of {ranking.q} teams given for {graph.q} teams!"
        raise DataError(msg)


def _check_assignment(p: ProbabilityAssignment, graph: TournamentGraph) -> None:
    """Validate that given assignment is defined on the graph edges."""

    if p.graph.q != graph.q or p.graph.edges != graph.edges:
        msg = "Probability assignment is not defined on the tournament graph edges!"
        raise DataError(msg)


def _prune_transitive(
    pairs: list[tuple[DirectedEdge, DirectedEdge]],
) -> list[tuple[DirectedEdge, DirectedEdge]]:
    """
    Drop the order pairs implied by transitivity, one at a time so that the
    transitive closure is preserved.
    """

    successors: dict[DirectedEdge, set[DirectedEdge]] = defaultdict(set)
    for lower, upper in pairs:
        successors[lower].add(upper)

    def reachable(source: DirectedEdge, target: DirectedEdge) -> bool:
        """Return whether target is reachable without the direct pair."""

        queue = deque(node for node in successors[source] if node != target)
        visited = set(queue)
        while queue:
            node = queue.popleft()
            if node == target:
                return True

            for successor in successors[node]:
                if successor not in visited:
                    visited.add(successor)
                    queue.append(successor)

        return False

    kept = []
    for lower, upper in pairs:
        if reachable(lower, upper):
            successors[lower].discard(upper)
        else:
            kept.append((lower, upper))

    return kept


@dataclass(frozen=True, eq=False)
class ConstraintSystem:
    """
    Define the weak inequality system that the null hypothesis "``ranking``
    is consistent with the data" imposes on the win probabilities.

    Parameters
    ----------
    graph
        Tournament graph.
    ranking
        Tested ranking.
    boundary
        Directed edges :math:`(j, \\ell)` meaning
        :math:`p_{j, \\ell} \\leq 1 / 2`.
    order
        Directed edge pairs :math:`((j, \\ell), (i, k))` meaning
        :math:`p_{j, \\ell} - p_{i, k} \\leq 0`.
    edge_index
        Directed edge to canonical slot and orientation flag, the flag being
        set when the directed edge is the reverse of the canonical one.
    """

    graph: TournamentGraph
    ranking: Ranking
    boundary: tuple[DirectedEdge, ...]
    order: tuple[tuple[DirectedEdge, DirectedEdge], ...]
    edge_index: Mapping[DirectedEdge, tuple[int, bool]] = field(repr=False)

    def _coordinates(self, edge: DirectedEdge) -> tuple[int, float, float]:
        """
        Return the slot, coefficient and offset expressing a directed
        probability in canonical coordinates.
        """

        index, reversed_ = self.edge_index[edge]

        return (index, -1.0, 1.0) if reversed_ else (index, 1.0, 0.0)

    @cached_property
    def inequalities(self) -> tuple[NDArrayFloat, NDArrayFloat]:
        """
        Return the system as :math:`G p \\leq h` in canonical coordinates,
        boundary rows first.
        """

        rows, offsets = [], []
        for edge in self.boundary:
            index, coefficient, offset = self._coordinates(edge)
            row = np.zeros(self.graph.n_edges)
            row[index] = coefficient
            rows.append(row)
            offsets.append(0.5 - offset)

        for lower, upper in self.order:
            index_l, coefficient_l, offset_l = self._coordinates(lower)
            index_u, coefficient_u, offset_u = self._coordinates(upper)
            row = np.zeros(self.graph.n_edges)
            row[index_l] += coefficient_l
            row[index_u] -= coefficient_u
            if not np.any(row):
                continue

            rows.append(row)
            offsets.append(offset_u - offset_l)

        G = np.array(rows, dtype=np.float64).reshape(-1, self.graph.n_edges)
        h = np.array(offsets, dtype=np.float64)
        G.setflags(write=False)
        h.setflags(write=False)

        return G, h

    @cached_property
    def tied_edges(self) -> tuple[int, ...]:
        """Canonical slots whose teams share a rank, forcing one half."""

        return tuple(
            index
            for index, (first, second) in enumerate(self.graph.edges)
            if self.ranking.rank(first) == self.ranking.rank(second)
        )

    def directed_values(self, p: ArrayLike) -> NDArrayFloat:
        """
        Return the boundary directed probabilities given canonical
        probabilities.
        """

        p = np.asarray(p, dtype=np.float64)
        values = []
        for edge in self.boundary:
            index, coefficient, offset = self._coordinates(edge)
            values.append(offset + coefficient * p[index])

        return np.array(values, dtype=np.float64)

    def is_satisfied(self, p: ArrayLike, tol: float = 0.0) -> bool:
        """Return whether canonical probabilities satisfy the system."""

        G, h = self.inequalities

        return bool(np.all(G @ np.asarray(p, dtype=np.float64) <= h + tol))

    def feasible_point(self) -> NDArrayFloat:
        """
        Return a point of the system: directed probability one quarter on
        strict boundary edges and one half on tied edges.
        """

        point = np.full(self.graph.n_edges, 0.5)
        for edge in self.boundary:
            first, second = edge
            if self.ranking.rank(first) == self.ranking.rank(second):
                continue

            index, reversed_ = self.edge_index[edge]
            point[index] = 0.75 if reversed_ else 0.25

        return point


def build_constraint_system(
    graph: TournamentGraph, ranking: Ranking, prune: bool = True
) -> ConstraintSystem:
    """
    Build the inequality system that the null hypothesis "``ranking`` is
    consistent with the data" imposes on the win probabilities.

    Parameters
    ----------
    graph
        Tournament graph.
    ranking
        Tested ranking, ties are allowed: tied edges enter the boundary in
        both orientations, forcing one half.
    prune
        Whether to drop the order pairs implied by transitivity, the
        described polytope is unchanged.

    Returns
    -------
    :class:`partial_ranking.ConstraintSystem`
        Boundary edges :math:`(j, \\ell)` with
        :math:`r_\\ell \\leq r_j` and order pairs
        :math:`((j, \\ell), (i, k))` with
        :math:`r_\\ell \\leq r_k \\leq r_i \\leq r_j`.

    Raises
    ------
    DataError
        If the ranking does not cover the graph teams.

    Examples
    --------
    >>> graph = TournamentGraph(3, [(1, 2), (3, 2)])
    >>> system = build_constraint_system(graph, Ranking((2, 1, 3)))
    >>> system.boundary, system.order
    (((1, 2), (3, 2)), (((3, 2), (1, 2)),))
    """

    _check_ranking(graph, ranking)

    r = ranking.r
    boundary = tuple(
        sorted(
            (j, ell)
            for j, ell in graph.directed_edges()
            if r[ell - 1] <= r[j - 1]
        )
    )
    order = [
        (lower, upper)
        for lower in boundary
        for upper in boundary
        if lower != upper
        and r[lower[1] - 1] <= r[upper[1] - 1] <= r[upper[0] - 1] <= r[lower[0] - 1]
    ]
    n_order = len(order)
    if prune:
        order = _prune_transitive(order)

    LOGGER.debug(
        'Ranking "%s": %s boundary constraints, %s order constraints '
        "(%s pruned).",
        ranking,
        len(boundary),
        len(order),
        n_order - len(order),
    )

    return ConstraintSystem(
        graph,
        ranking,
        boundary,
        tuple(order),
        {edge: graph.edge_index(*edge) for edge in graph.directed_edges()},
    )


def _tolerant_sign(x: float, tol: float) -> int:
    """Return the sign of given number, zero within tolerance."""

    return 0 if abs(x) <= tol else sign(x)


def check_membership(
    p: ProbabilityAssignment,
    graph: TournamentGraph,
    ranking: Ranking,
    tol: float = 0.0,
) -> bool:
    """
    Return whether given ranking belongs to the nonparametric identified set
    by verifying the sign conditions on direct games, games against equally
    ranked opponents and games among any four teams.

    Parameters
    ----------
    p
        Population win probabilities.
    graph
        Tournament graph.
    ranking
        Tested ranking.
    tol
        Probability differences within this tolerance compare as equal, exact
        comparisons by default.

    Examples
    --------
    >>> graph = TournamentGraph(4, [(1, 2), (2, 3), (3, 4)])
    >>> p = ProbabilityAssignment(graph, [0.75, 0.7, 0.2])
    >>> check_membership(p, graph, Ranking((1, 3, 4, 2)))
    True
    >>> check_membership(p, graph, Ranking((4, 3, 2, 1)))
    False
    """

    _check_assignment(p, graph)
    _check_ranking(graph, ranking)

    r = ranking.r
    directed = [
        (first, second, p.oriented(first, second))
        for first, second in graph.directed_edges()
    ]

    for ell, k, p_ell_k in directed:
        if sign(r[ell - 1] - r[k - 1]) + _tolerant_sign(p_ell_k - 0.5, tol) != 0:
            return False

    for i, k, p_i_k in directed:
        for j, ell, p_j_ell in directed:
            rank_sign = sign(r[ell - 1] - r[k - 1])
            probability_sign = _tolerant_sign(p_i_k - p_j_ell, tol)
            if r[i - 1] == r[j - 1]:
                if rank_sign + probability_sign != 0:
                    return False
            elif r[i - 1] > r[j - 1] and min(rank_sign, probability_sign) != -1:
                return False

    return True


def check_membership_matrix(
    p: ProbabilityAssignment,
    graph: TournamentGraph,
    ranking: Ranking,
    merge_ties: bool = False,
    tol: float = 0.0,
) -> bool:
    """
    Return whether given ranking belongs to the nonparametric identified set
    using the probability matrix representation: ordering rows and columns by
    rank, every non-empty entry must be strictly smaller than the entries
    weakly north-east of it.

    Parameters
    ----------
    p
        Population win probabilities.
    graph
        Tournament graph.
    ranking
        Tested ranking.
    merge_ties
        Whether to merge teams sharing a rank into single nodes, the entries
        mapped to a merged cell must then coincide.
    tol
        Probability differences within this tolerance compare as equal.

    Raises
    ------
    DataError
        If the ranking has ties and ``merge_ties`` is not set.
    """

    _check_assignment(p, graph)
    _check_ranking(graph, ranking)

    if ranking.has_ties and not merge_ties:
        msg = (
            f'Ranking "{ranking}" has ties, the matrix representation requires '
            "merging the tied teams!"
        )
        raise DataError(msg)

    quotient, _block_ranking, blocks = contract_ties(graph, ranking)

    cells: dict[tuple[int, int], list[float]] = defaultdict(list)
    for block in quotient.teams:
        cells[(block, block)].append(0.5)

    for first, second in graph.directed_edges():
        cells[(blocks[first - 1], blocks[second - 1])].append(
            p.oriented(first, second)
        )

    entries = {}
    for cell, values in cells.items():
        if max(values) - min(values) > tol:
            return False

        entries[cell] = values[0]

    for (i, j), a_i_j in entries.items():
        for (i_, j_), a_i_j_ in entries.items():
            if (i, j) == (i_, j_) or not (i >= i_ and j <= j_):
                continue

            if a_i_j_ - a_i_j <= tol:
                return False

    return True


@dataclass(frozen=True)
class IdentifiedSet:
    """
    Define a set of rankings, e.g., an identified set or a confidence set,
    and its per-team rank projections.

    Parameters
    ----------
    q
        Number of teams.
    rankings
        Rankings, sorted lexicographically.
    """

    q: int
    rankings: tuple[Ranking, ...] = ()

    def __post_init__(self) -> None:
        """Sort and deduplicate the rankings."""

        for ranking in self.rankings:
            if ranking.q != self.q:
                msg = f"Ranking of {ranking.q} teams given for {self.q} teams!"
                raise DataError(msg)

        object.__setattr__(self, "rankings", tuple(sorted(set(self.rankings))))

    @cached_property
    def per_team(self) -> dict[int, frozenset[int]]:
        """Per-team projection of the rankings."""

        return {
            team: frozenset(ranking.r[team - 1] for ranking in self.rankings)
            for team in range(1, self.q + 1)
        }

    def bounds(self, team: int) -> tuple[int, int] | None:
        """
        Return the smallest and largest rank of given team, the projection
        may not contain every rank in between.
        """

        ranks = project_rank(self, team)

        return (min(ranks), max(ranks)) if ranks else None

    def __contains__(self, ranking: object) -> bool:
        """Return whether given ranking belongs to the set."""

        return ranking in set(self.rankings)

    def __iter__(self) -> Iterator[Ranking]:
        """Iterate over the rankings."""

        return iter(self.rankings)

    def __len__(self) -> int:
        """Return the number of rankings."""

        return len(self.rankings)


def identified_set(
    p: ProbabilityAssignment,
    graph: TournamentGraph,
    allow_ties: bool = False,
    model: Literal["nonparametric", "semiparametric"] = "nonparametric",
    tol: float = 0.0,
    margin: float = 1e-6,
    max_teams: int = MAXIMUM_ENUMERATION_TEAMS,
) -> IdentifiedSet:
    """
    Return the identified set: every ranking observationally equivalent to
    given win probabilities.

    Parameters
    ----------
    p
        Population win probabilities.
    graph
        Tournament graph.
    allow_ties
        Whether to consider rankings with ties.
    model
        *Nonparametric* model with unknown link or linear *semiparametric*
        model with unknown link.
    tol
        Equality tolerance of the membership checks.
    margin
        Strictness margin of the semiparametric feasibility program.
    max_teams
        Largest team count allowed for the enumeration.

    Raises
    ------
    EnumerationBudgetError
        If the team count exceeds ``max_teams``.

    Examples
    --------
    >>> graph = TournamentGraph(4, [(1, 2), (2, 3), (3, 4)])
    >>> p = ProbabilityAssignment(graph, [0.75, 0.7, 0.2])
    >>> [ranking.r for ranking in identified_set(p, graph)]
    [(1, 3, 4, 2), (2, 3, 4, 1)]
    """

    _check_assignment(p, graph)

    if model == "nonparametric":

        def member(ranking: Ranking) -> bool:
            return check_membership(p, graph, ranking, tol)

    elif model == "semiparametric":

        def member(ranking: Ranking) -> bool:
            return check_membership_semiparametric(p, graph, ranking, margin, tol)

    else:
        msg = (
            f'"{model}" model is invalid, it must be one of "nonparametric", '
            '"semiparametric"!'
        )
        raise DataError(msg)

    rankings = tuple(
        ranking
        for ranking in enumerate_rankings(graph.q, allow_ties, max_teams)
        if member(ranking)
    )

    LOGGER.info(
        "Identified set (%s model) holds %s rankings.", model, len(rankings)
    )

    return IdentifiedSet(graph.q, rankings)


def project_rank(identified: IdentifiedSet, team: int) -> frozenset[int]:
    """
    Return the ranks of given team over the rankings of a set.

    Raises
    ------
    DataError
        If the team is unknown.

    Examples
    --------
    >>> rankings = (Ranking((1, 3, 4, 2)), Ranking((2, 3, 4, 1)))
    >>> sorted(project_rank(IdentifiedSet(4, rankings), 1))
    [1, 2]
    """

    if isinstance(team, bool) or not isinstance(team, (int, np.integer)):
        msg = f'Team "{team!r}" is not an integer identifier!'
        raise DataError(msg)

    if not 1 <= team <= identified.q:
        msg = f'Team "{team}" is outside of the [1, {identified.q}] range!'
        raise DataError(msg)

    return identified.per_team[int(team)]


def solve_linear_parametric(
    p: ProbabilityAssignment,
    graph: TournamentGraph,
    link: LinkFunction = LINK_BTL,
    norm_team: int = 1,
    norm_value: float = 0.0,
    tol: float = 1e-8,
) -> MeritVector:
    """
    Solve the merits of the linear parametric model with known link:
    :math:`\\theta_k - \\theta_\\ell = f^{-1}(p_{\\ell, k})` along a spanning
    tree, the remaining edges being verified against the solution.

    Parameters
    ----------
    p
        Win probabilities.
    graph
        Connected tournament graph.
    link
        Known link function.
    norm_team
        Team whose merit is fixed.
    norm_value
        Merit of ``norm_team``.
    tol
        Largest residual allowed on the edges outside of the spanning tree,
        estimated probabilities call for a larger tolerance.

    Returns
    -------
    :class:`partial_ranking.MeritVector`
        Merits.

    Raises
    ------
    DataError
        If the graph is disconnected.
    InconsistentSystemError
        If an edge outside of the spanning tree has a residual larger than
        ``tol``.

    Examples
    --------
    >>> graph = TournamentGraph(4, [(1, 2), (2, 3), (3, 4)])
    >>> p = ProbabilityAssignment(graph, [0.75, 0.7, 0.2])
    >>> theta = solve_linear_parametric(p, graph, norm_value=1)
    >>> np.round(theta.theta, 3).tolist()
    [1.0, 2.099, 2.946, 1.56]
    """

    _check_assignment(p, graph)

    if not 1 <= norm_team <= graph.q:
        msg = (
            f'Normalisation team "{norm_team}" is outside of the [1, {graph.q}] '
            "range!"
        )
        raise DataError(msg)

    if not is_connected(graph):
        msg = "The linear parametric model requires a connected tournament graph!"
        raise DataError(msg)

    order, predecessors = breadth_first_order(
        csr_matrix(graph.adjacency()),
        norm_team - 1,
        directed=False,
        return_predecessors=True,
    )

    theta = np.zeros(graph.q)
    theta[norm_team - 1] = norm_value
    tree = set()
    for node in order[1:]:
        parent = int(predecessors[node])
        theta[node] = theta[parent] + float(
            link.inverse(p.oriented(parent + 1, int(node) + 1))
        )
        tree.add((min(parent, int(node)) + 1, max(parent, int(node)) + 1))

    worst_edge, worst_residual = None, 0.0
    for index, (first, second) in enumerate(graph.edges):
        if (first, second) in tree:
            continue

        residual = (theta[second - 1] - theta[first - 1]) - float(
            link.inverse(p.p[index])
        )
        if abs(residual) > abs(worst_residual) or worst_edge is None:
            worst_edge, worst_residual = (first, second), residual

    if worst_edge is not None and abs(worst_residual) > tol:
        msg = (
            f'Edge "{worst_edge}" is inconsistent with the "{link.name}" link: '
            f"residual {worst_residual:.6g} exceeds tolerance {tol:.6g}!"
        )
        raise InconsistentSystemError(msg, worst_edge, worst_residual)

    return MeritVector(theta)


def _semiparametric_program(
    p: ProbabilityAssignment,
    graph: TournamentGraph,
    ranking: Ranking,
    tol: float,
) -> tuple[float, NDArrayFloat] | None:
    """
    Solve the linear program maximising the smallest slack of the linear
    semiparametric sign conditions over merits boxed in :math:`[0, 1]`.

    Returns
    -------
    :class:`tuple` or :py:data:`None`
        Optimal slack and merits, :py:data:`None` when the equalities are
        inconsistent.
    """

    q = graph.q
    r = ranking.r
    upper_rows, equality_rows = [], []

    # Rank conditions: the merit order follows the ranking.
    for ell in range(q):
        for k in range(ell + 1, q):
            row = np.zeros(q + 1)
            if r[k] == r[ell]:
                row[k], row[ell] = 1, -1
                equality_rows.append(row)
                continue

            better, worse = (ell, k) if r[ell] < r[k] else (k, ell)
            row[better], row[worse], row[q] = 1, -1, 1
            upper_rows.append(row)

    # Difference conditions: merit gaps follow the win probabilities.
    directed = [
        (i - 1, k - 1, p.oriented(i, k)) for i, k in graph.directed_edges()
    ]
    for a, (i, k, p_i_k) in enumerate(directed):
        for b, (v, u, p_v_u) in enumerate(directed):
            if a >= b and abs(p_i_k - p_v_u) <= tol:
                continue

            row = np.zeros(q + 1)
            row[k] += 1
            row[i] -= 1
            row[u] -= 1
            row[v] += 1
            if abs(p_i_k - p_v_u) <= tol:
                if np.any(row[:q]):
                    equality_rows.append(row)
            elif p_i_k > p_v_u:
                row = -row
                row[q] = 1
                upper_rows.append(row)

    c = np.zeros(q + 1)
    c[q] = -1

    result = linprog(
        c,
        A_ub=np.array(upper_rows).reshape(-1, q + 1) if upper_rows else None,
        b_ub=np.zeros(len(upper_rows)) if upper_rows else None,
        A_eq=np.array(equality_rows).reshape(-1, q + 1) if equality_rows else None,
        b_eq=np.zeros(len(equality_rows)) if equality_rows else None,
        bounds=[(0, 1)] * q + [(None, 1)],
        method="highs",
    )

    if result.status != 0:
        LOGGER.debug(
            'Semiparametric program for "%s" failed: %s', ranking, result.message
        )
        return None

    return float(-result.fun), np.asarray(result.x[:q])


def semiparametric_witness(
    p: ProbabilityAssignment,
    graph: TournamentGraph,
    ranking: Ranking,
    margin: float = 1e-6,
    tol: float = 0.0,
) -> NDArrayFloat | None:
    """
    Return merits :math:`\\nu` witnessing the membership of given ranking in
    the linear semiparametric identified set, :py:data:`None` if there are
    none with slack ``margin``.
    """

    _check_assignment(p, graph)
    _check_ranking(graph, ranking)

    if margin <= 0:
        msg = f'Strictness margin must be positive, got "{margin}"!'
        raise DataError(msg)

    solution = _semiparametric_program(p, graph, ranking, tol)
    if solution is None:
        return None

    slack, nu = solution

    return nu if slack >= margin else None


def check_membership_semiparametric(
    p: ProbabilityAssignment,
    graph: TournamentGraph,
    ranking: Ranking,
    margin: float = 1e-6,
    tol: float = 0.0,
) -> bool:
    """
    Return whether given ranking belongs to the linear semiparametric
    identified set: some merits :math:`\\nu` order the teams as the ranking
    does while every merit gap :math:`\\nu_k - \\nu_i` orders the edges as
    their win probabilities :math:`p_{i, k}` do.

    Parameters
    ----------
    p
        Population win probabilities.
    graph
        Tournament graph.
    ranking
        Tested ranking.
    margin
        Smallest slack accepted for the strict inequalities.
    tol
        Probability differences within this tolerance compare as equal.

    Examples
    --------
    >>> graph = TournamentGraph(2, [(1, 2)])
    >>> p = ProbabilityAssignment(graph, [0.6])
    >>> check_membership_semiparametric(p, graph, Ranking((1, 2)))
    True
    """

    return semiparametric_witness(p, graph, ranking, margin, tol) is not None
