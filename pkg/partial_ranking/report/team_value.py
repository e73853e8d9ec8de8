"""Real value attached to a team."""

from __future__ import annotations

from dataclasses import dataclass, field

__all__ = ["TeamValue"]


@dataclass
class TeamValue:
    """
    Real value attached to a team, e.g., a merit or a *PageRank* score.

    Parameters
    ----------
    team
        Team name.
    value
    rank
        Rank implied by the values.
    """

    team: None | str = field(
        default=None,
        metadata={
            "type": "Element",
            "required": True,
        },
    )
    value: None | float = field(
        default=None,
        metadata={
            "type": "Element",
            "required": True,
        },
    )
    rank: None | int = field(
        default=None,
        metadata={
            "type": "Element",
        },
    )
