"""Rank frequency table of an experiment."""

from __future__ import annotations

from dataclasses import dataclass, field

from partial_ranking.report.frequency_row import FrequencyRow
from partial_ranking.report.ranking_coverage import RankingCoverage

__all__ = ["FrequencyTable"]


@dataclass
class FrequencyTable:
    """
    Per-team rank frequencies of the confidence sets of a Monte Carlo
    experiment.

    Parameters
    ----------
    replications
    rows
        One row per team.
    mean_set_size
        Average confidence set cardinality.
    ranking_coverage
    """

    replications: None | int = field(
        default=None,
        metadata={
            "type": "Element",
            "required": True,
        },
    )
    rows: list[FrequencyRow] = field(
        default_factory=list,
        metadata={
            "type": "Element",
        },
    )
    mean_set_size: None | float = field(
        default=None,
        metadata={
            "type": "Element",
        },
    )
    ranking_coverage: list[RankingCoverage] = field(
        default_factory=list,
        metadata={
            "type": "Element",
        },
    )
