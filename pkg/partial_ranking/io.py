"""
Input / Output
==============

Define the readers and writers of the tabular data and the reports:

-   :func:`partial_ranking.read_edges_csv`,
    :func:`partial_ranking.write_edges_csv`: Per-edge win counts.
-   :func:`partial_ranking.read_probabilities_csv`,
    :func:`partial_ranking.write_probabilities_csv`: Per-edge win
    probabilities.
-   :func:`partial_ranking.write_frequency_csv`: Rank frequency tables.
-   :func:`partial_ranking.read_report`, :func:`partial_ranking.write_report`:
    *JSON* reports bound to :mod:`partial_ranking.report`.
-   :func:`partial_ranking.read_experiment_config`: *JSON* Monte Carlo
    experiment documents.

*CSV* files are *UTF-8* encoded, comma separated and have a mandatory header.
"""

from __future__ import annotations

import csv
import json
import logging
import platform
from collections.abc import Iterator, Sequence
from datetime import datetime, timezone
from os import PathLike
from pathlib import Path
from typing import TypeVar

import numpy as np
import scipy
from xsdata.exceptions import ParserError
from xsdata.formats.dataclass.context import XmlContext
from xsdata.formats.dataclass.parsers import JsonParser
from xsdata.formats.dataclass.serializers import JsonSerializer
from xsdata.formats.dataclass.serializers.config import SerializerConfig
from xsdata.formats.dataclass.serializers import DictFactory

import partial_ranking.report
from partial_ranking.core import (
    OutcomeData,
    ProbabilityAssignment,
    TournamentGraph,
)
from partial_ranking.exceptions import DataError
from partial_ranking.ident import IdentifiedSet
from partial_ranking.inference import TestOutcome
from partial_ranking.montecarlo import ExperimentConfig, RankFrequencyTable

__author__ = "Partial Ranking Developers"
__copyright__ = "Copyright 2026 Partial Ranking Developers"
__license__ = "BSD-3-Clause - https://opensource.org/licenses/BSD-3-Clause"
__maintainer__ = "Partial Ranking Developers"
__email__ = "partial-ranking-developers@googlegroups.com"
__status__ = "Production"

__all__ = [
    "HEADER_EDGES",
    "HEADER_PROBABILITIES",
    "read_edges_csv",
    "write_edges_csv",
    "read_probabilities_csv",
    "write_probabilities_csv",
    "write_frequency_csv",
    "ranking_set_to_report",
    "test_outcome_to_report",
    "frequency_table_to_report",
    "report_metadata",
    "read_report",
    "parse_report",
    "write_report",
    "read_experiment_config",
]

LOGGER = logging.getLogger(__name__)

T = TypeVar("T")

HEADER_EDGES: tuple[str, ...] = ("team_i", "team_j", "wins_i", "wins_j")
"""Header of the per-edge win counts *CSV* files."""

HEADER_PROBABILITIES: tuple[str, ...] = ("team_i", "team_j", "prob_i_beats_j")
"""Header of the per-edge win probabilities *CSV* files."""


def _read_rows(
    path: str | PathLike[str], header: Sequence[str]
) -> Iterator[tuple[int, list[str]]]:
    """
    Yield the line number and stripped fields of the data rows of given
    *CSV* file.

    Raises
    ------
    DataError
        If the header is missing or a row does not have as many fields as the
        header.
    """

    with open(path, newline="", encoding="utf-8") as file:
        reader = csv.reader(file)
        fields = next(reader, None)
        if fields is None or [field.strip() for field in fields] != list(header):
            msg = f'"{path}": header must be "{",".join(header)}", got {fields}!'
            raise DataError(msg)

        for row in reader:
            if not row or all(not value.strip() for value in row):
                continue

            if len(row) != len(header):
                msg = (
                    f'"{path}", line {reader.line_num}: row must have '
                    f"{len(header)} fields, got {len(row)}!"
                )
                raise DataError(msg)

            yield reader.line_num, [value.strip() for value in row]


def _team_identifiers(
    pairs: Sequence[tuple[str, str]], teams: Sequence[str] | None
) -> dict[str, int]:
    """
    Return the dense team identifiers, following ``teams`` when given and
    the first appearance order otherwise.
    """

    if teams is not None:
        named = {name: i + 1 for i, name in enumerate(teams)}
        if len(named) != len(teams):
            msg = f"Team names must be unique, got {teams}!"
            raise DataError(msg)

        return named

    identifiers: dict[str, int] = {}
    for first, second in pairs:
        identifiers.setdefault(first, len(identifiers) + 1)
        identifiers.setdefault(second, len(identifiers) + 1)

    return identifiers


def _parse_integer(path: str | PathLike[str], line: int, name: str, text: str) -> int:
    """Parse a non-negative integer field."""

    try:
        value = int(text)
    except ValueError as error:
        msg = f'"{path}", line {line}: "{name}" value "{text}" is not an integer!'
        raise DataError(msg) from error

    if value < 0:
        msg = f'"{path}", line {line}: "{name}" must be non-negative, got {value}!'
        raise DataError(msg)

    return value


def _read_pairs(
    path: str | PathLike[str], header: Sequence[str]
) -> list[tuple[int, str, str, list[str]]]:
    """
    Read the rows of a per-edge *CSV* file, rejecting self-pairs and
    duplicate pairs in either orientation.
    """

    rows = []
    seen: dict[frozenset[str], int] = {}
    for line, (first, second, *values) in _read_rows(path, header):
        if not first or not second:
            msg = f'"{path}", line {line}: team names must not be empty!'
            raise DataError(msg)

        if first == second:
            msg = f'"{path}", line {line}: team "{first}" cannot play itself!'
            raise DataError(msg)

        pair = frozenset((first, second))
        if pair in seen:
            msg = (
                f'"{path}", line {line}: pair "{first},{second}" duplicates '
                f"line {seen[pair]}!"
            )
            raise DataError(msg)

        seen[pair] = line
        rows.append((line, first, second, values))

    if not rows:
        msg = f'"{path}": tournament graph is empty!'
        raise DataError(msg)

    return rows


def _build_graph(
    path: str | PathLike[str],
    rows: list[tuple[int, str, str, list[str]]],
    teams: Sequence[str] | None,
) -> tuple[TournamentGraph, dict[str, int]]:
    """Build the tournament graph of given per-edge rows."""

    identifiers = _team_identifiers(
        [(first, second) for _, first, second, _ in rows], teams
    )
    for line, first, second, _values in rows:
        for name in (first, second):
            if name not in identifiers:
                msg = f'"{path}", line {line}: team "{name}" is unknown!'
                raise DataError(msg)

    graph = TournamentGraph(
        len(identifiers),
        tuple(
            (identifiers[first], identifiers[second]) for _, first, second, _ in rows
        ),
        tuple(identifiers),
    )

    return graph, identifiers


def read_edges_csv(
    path: str | PathLike[str], teams: Sequence[str] | None = None
) -> OutcomeData:
    """
    Read per-edge win counts from a *CSV* file with a
    ``team_i,team_j,wins_i,wins_j`` header, one row per pair of teams.

    Parameters
    ----------
    path
        *CSV* file path.
    teams
        Team names defining the identifiers, the first appearance order is
        used otherwise.

    Returns
    -------
    :class:`partial_ranking.OutcomeData`
        Outcome data, the graph carrying the team names.

    Raises
    ------
    DataError
        If the file is empty, a pair is duplicated, a count is negative or a
        row is malformed, the message carries the file name and line number.
    """

    rows = _read_pairs(path, HEADER_EDGES)
    graph, identifiers = _build_graph(path, rows, teams)

    counts = {}
    for line, first, second, (wins_first, wins_second) in rows:
        wins_first = _parse_integer(path, line, "wins_i", wins_first)
        wins_second = _parse_integer(path, line, "wins_j", wins_second)
        if wins_first + wins_second == 0:
            msg = f'"{path}", line {line}: pair "{first},{second}" has no games!'
            raise DataError(msg)

        counts[(identifiers[first], identifiers[second])] = (
            wins_first + wins_second,
            wins_first,
        )

    LOGGER.debug(
        'Read %s edges between %s teams from "%s".', graph.n_edges, graph.q, path
    )

    return OutcomeData.from_mapping(graph, counts)


def write_edges_csv(data: OutcomeData, path: str | PathLike[str]) -> None:
    """
    Write per-edge win counts to a *CSV* file with a
    ``team_i,team_j,wins_i,wins_j`` header.
    """

    graph = data.graph
    with open(path, "w", newline="", encoding="utf-8") as file:
        writer = csv.writer(file, lineterminator="\n")
        writer.writerow(HEADER_EDGES)
        for i, (first, second) in enumerate(graph.edges):
            writer.writerow(
                [
                    graph.team_name(first),
                    graph.team_name(second),
                    int(data.w[i]),
                    int(data.n[i] - data.w[i]),
                ]
            )


def read_probabilities_csv(
    path: str | PathLike[str], teams: Sequence[str] | None = None
) -> ProbabilityAssignment:
    """
    Read per-edge win probabilities from a *CSV* file with a
    ``team_i,team_j,prob_i_beats_j`` header, one row per pair of teams.

    Raises
    ------
    DataError
        If the file is empty, a pair is duplicated, a probability is outside
        of :math:`(0, 1)` or a row is malformed.
    """

    rows = _read_pairs(path, HEADER_PROBABILITIES)
    graph, identifiers = _build_graph(path, rows, teams)

    probabilities = {}
    for line, first, second, (text,) in rows:
        try:
            probability = float(text)
        except ValueError as error:
            msg = f'"{path}", line {line}: probability "{text}" is not a number!'
            raise DataError(msg) from error

        if not 0 < probability < 1:
            msg = (
                f'"{path}", line {line}: probability must be in the (0, 1) '
                f"interval, got {probability}!"
            )
            raise DataError(msg)

        probabilities[(identifiers[first], identifiers[second])] = probability

    return ProbabilityAssignment.from_mapping(graph, probabilities)


def write_probabilities_csv(
    p: ProbabilityAssignment, path: str | PathLike[str]
) -> None:
    """
    Write per-edge win probabilities to a *CSV* file with a
    ``team_i,team_j,prob_i_beats_j`` header.
    """

    graph = p.graph
    with open(path, "w", newline="", encoding="utf-8") as file:
        writer = csv.writer(file, lineterminator="\n")
        writer.writerow(HEADER_PROBABILITIES)
        for i, (first, second) in enumerate(graph.edges):
            writer.writerow(
                [graph.team_name(first), graph.team_name(second), repr(float(p.p[i]))]
            )


def write_frequency_csv(
    table: RankFrequencyTable,
    path: str | PathLike[str],
    names: Sequence[str] | None = None,
    standard_errors: bool = False,
) -> None:
    """
    Write a rank frequency table to a *CSV* file: one row per team, one
    ``rank_k`` column per rank and optionally one ``se_k`` column per rank.
    """

    q = table.q
    names = names or [str(team) for team in range(1, q + 1)]
    header = ["team"] + [f"rank_{rank}" for rank in range(1, q + 1)]
    if standard_errors:
        header += [f"se_{rank}" for rank in range(1, q + 1)]

    with open(path, "w", newline="", encoding="utf-8") as file:
        writer = csv.writer(file, lineterminator="\n")
        writer.writerow(header)
        for team in range(q):
            row = [names[team]]
            row += [repr(float(value)) for value in table.frequencies[team]]
            if standard_errors:
                row += [repr(float(value)) for value in table.standard_errors[team]]

            writer.writerow(row)


def ranking_set_to_report(
    identified: IdentifiedSet, graph: TournamentGraph
) -> partial_ranking.report.RankingSet:
    """Return the report element of given set of rankings."""

    return partial_ranking.report.RankingSet(
        rankings=[str(ranking) for ranking in identified],
        per_team=[
            partial_ranking.report.TeamRanks(
                graph.team_name(team), sorted(identified.per_team[team])
            )
            for team in graph.teams
        ],
    )


def test_outcome_to_report(
    outcome: TestOutcome,
) -> partial_ranking.report.TestResult:
    """Return the report element of given test outcome."""

    diagnostics = outcome.diagnostics

    return partial_ranking.report.TestResult(
        ranking=str(outcome.ranking),
        statistic=float(outcome.statistic),
        p_value=float(outcome.p_value),
        method=outcome.method,
        alpha=float(outcome.alpha),
        reject=bool(outcome.reject),
        converged=diagnostics.get("converged"),
        argmax=list(diagnostics.get("argmax", [])),
        region_size=diagnostics.get("region_size"),
        replications=diagnostics.get("replications"),
    )


test_outcome_to_report.__test__ = False  # pyright: ignore


def frequency_table_to_report(
    table: RankFrequencyTable, graph: TournamentGraph
) -> partial_ranking.report.FrequencyTable:
    """Return the report element of given rank frequency table."""

    return partial_ranking.report.FrequencyTable(
        replications=table.replications,
        rows=[
            partial_ranking.report.FrequencyRow(
                graph.team_name(team),
                [float(value) for value in table.frequencies[team - 1]],
                [float(value) for value in table.standard_errors[team - 1]],
            )
            for team in graph.teams
        ],
        mean_set_size=table.mean_set_size,
        ranking_coverage=[
            partial_ranking.report.RankingCoverage(str(ranking), float(frequency))
            for ranking, frequency in sorted(table.ranking_coverage.items())
        ],
    )


def report_metadata() -> partial_ranking.report.Metadata:
    """Return the provenance of the reports written now."""

    from partial_ranking import __version__

    return partial_ranking.report.Metadata(
        partial_ranking_version=__version__,
        python_version=platform.python_version(),
        numpy_version=np.__version__,
        scipy_version=scipy.__version__,
        created=datetime.now(timezone.utc).isoformat(timespec="seconds"),
    )


def write_report(
    report: partial_ranking.report.Report,
    path: str | PathLike[str] | None = None,
) -> str:
    """
    Serialise given report to *JSON*, omitting empty optional fields, and
    write it to ``path`` when given.

    Returns
    -------
    :class:`str`
        *JSON* document.
    """

    serializer = JsonSerializer(
        context=XmlContext(),
        config=SerializerConfig(indent="  "),
        dict_factory=DictFactory.FILTER_NONE,
    )
    document = serializer.render(report)

    if path is not None:
        Path(path).write_text(document + "\n", encoding="utf-8")

    return document


def _parse_json(document: str, clazz: type[T]) -> T:
    """
    Parse an instance of given binding class from a *JSON* document.

    Raises
    ------
    ParserError
        If the document is not well-formed or does not match the schema.
    """

    try:
        json.loads(document)
    except json.JSONDecodeError as error:
        msg = f"JSON is not well-formed: {error}"
        raise ParserError(msg) from error

    parser = JsonParser(context=XmlContext())

    return parser.from_string(document, clazz)


def parse_report(document: str) -> partial_ranking.report.Report:
    """
    Parse a report from a *JSON* document.

    Raises
    ------
    ParserError
        If the document does not match the report schema.
    """

    return _parse_json(document, partial_ranking.report.Report)


def read_report(path: str | PathLike[str]) -> partial_ranking.report.Report:
    """
    Read a report from a *JSON* file.

    Raises
    ------
    ParserError
        If the document does not match the report schema.
    """

    return parse_report(Path(path).read_text(encoding="utf-8"))


def read_experiment_config(path: str | PathLike[str]) -> ExperimentConfig:
    """
    Read a Monte Carlo experiment from a *JSON* document bound to
    :class:`partial_ranking.report.Experiment`, unknown keys being an error.

    Raises
    ------
    ParserError
        If the document does not match the experiment schema.
    DataError
        If the experiment is invalid.
    """

    experiment = _parse_json(
        Path(path).read_text(encoding="utf-8"), partial_ranking.report.Experiment
    )

    if experiment.games_per_edge is None:
        msg = f'"{path}": "games_per_edge" is required!'
        raise DataError(msg)

    identifiers = _team_identifiers(
        [
            (entry.team_i or "", entry.team_j or "")
            for entry in experiment.probabilities
        ],
        experiment.teams or None,
    )

    edges, probabilities = [], {}
    for entry in experiment.probabilities:
        if entry.team_i not in identifiers or entry.team_j not in identifiers:
            msg = f'"{path}": edge "{entry.team_i},{entry.team_j}" has an unknown team!'
            raise DataError(msg)

        if entry.probability is None:
            msg = f'"{path}": edge "{entry.team_i},{entry.team_j}" has no probability!'
            raise DataError(msg)

        edge = (identifiers[entry.team_i], identifiers[entry.team_j])
        edges.append(edge)
        probabilities[edge] = entry.probability

    if not edges:
        msg = f'"{path}": tournament graph is empty!'
        raise DataError(msg)

    graph = TournamentGraph(len(identifiers), tuple(edges), tuple(identifiers))

    return ExperimentConfig(
        graph,
        ProbabilityAssignment.from_mapping(graph, probabilities),
        experiment.games_per_edge,
        replications=experiment.replications,
        alpha=experiment.alpha,
        method=experiment.method,  # pyright: ignore
        seed=experiment.seed,
        allow_ties=experiment.allow_ties,
        workers=experiment.workers,
        asymptotic_replications=experiment.asymptotic_replications,
    )
