"""Set of rankings."""

from __future__ import annotations

from dataclasses import dataclass, field

from partial_ranking.report.team_ranks import TeamRanks

__all__ = ["RankingSet"]


@dataclass
class RankingSet:
    """
    Identified set or confidence set for the ranking.

    Parameters
    ----------
    rankings
        Comma separated rankings, sorted lexicographically.
    per_team
        Per-team rank projections.
    """

    rankings: list[str] = field(
        default_factory=list,
        metadata={
            "type": "Element",
        },
    )
    per_team: list[TeamRanks] = field(
        default_factory=list,
        metadata={
            "type": "Element",
        },
    )
