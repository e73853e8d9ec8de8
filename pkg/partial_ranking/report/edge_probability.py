"""Win probability of an edge."""

from __future__ import annotations

from dataclasses import dataclass, field

__all__ = ["EdgeProbability"]


@dataclass
class EdgeProbability:
    """
    Probability that ``team_i`` beats ``team_j``.
    """

    team_i: None | str = field(
        default=None,
        metadata={
            "type": "Element",
            "required": True,
        },
    )
    team_j: None | str = field(
        default=None,
        metadata={
            "type": "Element",
            "required": True,
        },
    )
    probability: None | float = field(
        default=None,
        metadata={
            "type": "Element",
            "required": True,
        },
    )
