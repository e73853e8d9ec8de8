"""Rank frequencies of a team."""

from __future__ import annotations

from dataclasses import dataclass, field

__all__ = ["FrequencyRow"]


@dataclass
class FrequencyRow:
    """
    Frequencies of the ranks of a team in the confidence sets.

    Parameters
    ----------
    team
        Team name.
    frequencies
        Frequency of rank :math:`k` at index :math:`k - 1`.
    standard_errors
        Monte Carlo standard errors of the frequencies.
    """

    team: None | str = field(
        default=None,
        metadata={
            "type": "Element",
            "required": True,
        },
    )
    frequencies: list[float] = field(
        default_factory=list,
        metadata={
            "type": "Element",
        },
    )
    standard_errors: list[float] = field(
        default_factory=list,
        metadata={
            "type": "Element",
        },
    )
