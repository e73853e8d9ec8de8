"""Configuration echo of a report."""

from __future__ import annotations

from dataclasses import dataclass, field

__all__ = ["RunConfig"]


@dataclass
class RunConfig:
    """
    Inputs, seeds, methods and tolerances of a command, rerunning the command
    with them reproduces the results.
    """

    inputs: list[str] = field(
        default_factory=list,
        metadata={
            "type": "Element",
        },
    )
    seed: None | int = field(
        default=None,
        metadata={
            "type": "Element",
        },
    )
    method: None | str = field(
        default=None,
        metadata={
            "type": "Element",
        },
    )
    alpha: None | float = field(
        default=None,
        metadata={
            "type": "Element",
        },
    )
    replications: None | int = field(
        default=None,
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
    allow_ties: None | bool = field(
        default=None,
        metadata={
            "type": "Element",
        },
    )
    model: None | str = field(
        default=None,
        metadata={
            "type": "Element",
        },
    )
    link: None | str = field(
        default=None,
        metadata={
            "type": "Element",
        },
    )
    normalize_team: None | str = field(
        default=None,
        metadata={
            "type": "Element",
        },
    )
    normalize_value: None | float = field(
        default=None,
        metadata={
            "type": "Element",
        },
    )
    tolerance: None | float = field(
        default=None,
        metadata={
            "type": "Element",
        },
    )
    min_games: None | int = field(
        default=None,
        metadata={
            "type": "Element",
        },
    )
    damping: None | float = field(
        default=None,
        metadata={
            "type": "Element",
        },
    )
    games_per_edge: None | int = field(
        default=None,
        metadata={
            "type": "Element",
        },
    )
    workers: None | int = field(
        default=None,
        metadata={
            "type": "Element",
        },
    )
