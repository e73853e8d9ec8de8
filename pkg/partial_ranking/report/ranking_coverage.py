"""Coverage of an identified ranking."""

from __future__ import annotations

from dataclasses import dataclass, field

__all__ = ["RankingCoverage"]


@dataclass
class RankingCoverage:
    """
    Inclusion frequency of a ranking of the population identified set in the
    confidence sets.
    """

    ranking: None | str = field(
        default=None,
        metadata={
            "type": "Element",
            "required": True,
        },
    )
    frequency: None | float = field(
        default=None,
        metadata={
            "type": "Element",
            "required": True,
        },
    )
