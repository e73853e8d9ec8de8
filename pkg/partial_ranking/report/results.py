"""Results section of a report."""

from __future__ import annotations

from dataclasses import dataclass, field

from partial_ranking.report.frequency_table import FrequencyTable
from partial_ranking.report.ranking_set import RankingSet
from partial_ranking.report.team_value import TeamValue
from partial_ranking.report.hypothesis_test import TestResult

__all__ = ["Results"]


@dataclass
class Results:
    """
    Results of a command, reproducible from the echoed configuration.

    Parameters
    ----------
    teams
        Team names, team :math:`t` being named ``teams[t - 1]``.
    identified_set
    test
    confidence_set
    frequency_table
    merits
        Linear parametric merits.
    scores
        *PageRank* scores.
    ranking
        Comma separated point ranking, e.g., the *PageRank* ranking.
    """

    teams: list[str] = field(
        default_factory=list,
        metadata={
            "type": "Element",
        },
    )
    identified_set: None | RankingSet = field(
        default=None,
        metadata={
            "type": "Element",
        },
    )
    test: None | TestResult = field(
        default=None,
        metadata={
            "type": "Element",
        },
    )
    confidence_set: None | RankingSet = field(
        default=None,
        metadata={
            "type": "Element",
        },
    )
    frequency_table: None | FrequencyTable = field(
        default=None,
        metadata={
            "type": "Element",
        },
    )
    merits: list[TeamValue] = field(
        default_factory=list,
        metadata={
            "type": "Element",
        },
    )
    scores: list[TeamValue] = field(
        default_factory=list,
        metadata={
            "type": "Element",
        },
    )
    ranking: None | str = field(
        default=None,
        metadata={
            "type": "Element",
        },
    )
