"""Projected ranks of a team."""

from __future__ import annotations

from dataclasses import dataclass, field

__all__ = ["TeamRanks"]


@dataclass
class TeamRanks:
    """
    Ranks of a team over the rankings of a set.

    Parameters
    ----------
    team
        Team name.
    ranks
        Sorted ranks.
    """

    team: None | str = field(
        default=None,
        metadata={
            "type": "Element",
            "required": True,
        },
    )
    ranks: list[int] = field(
        default_factory=list,
        metadata={
            "type": "Element",
        },
    )
