"""Monte Carlo experiment document."""

from __future__ import annotations

from dataclasses import dataclass, field

from partial_ranking.report.edge_probability import EdgeProbability

__all__ = ["Experiment"]


@dataclass
class Experiment:
    """
    Monte Carlo experiment: data generating process, design and test.

    Parameters
    ----------
    teams
        Team names, every team of the tournament graph must be listed.
    probabilities
        Data generating process, one entry per edge.
    games_per_edge
    replications
    alpha
    method
        ``finite_sample`` or ``asymptotic``.
    seed
    allow_ties
    workers
    asymptotic_replications
    """

    teams: list[str] = field(
        default_factory=list,
        metadata={
            "type": "Element",
        },
    )
    probabilities: list[EdgeProbability] = field(
        default_factory=list,
        metadata={
            "type": "Element",
        },
    )
    games_per_edge: None | int = field(
        default=None,
        metadata={
            "type": "Element",
            "required": True,
        },
    )
    replications: int = field(
        default=1000,
        metadata={
            "type": "Element",
        },
    )
    alpha: float = field(
        default=0.1,
        metadata={
            "type": "Element",
        },
    )
    method: str = field(
        default="finite_sample",
        metadata={
            "type": "Element",
        },
    )
    seed: int = field(
        default=0,
        metadata={
            "type": "Element",
        },
    )
    allow_ties: bool = field(
        default=False,
        metadata={
            "type": "Element",
        },
    )
    workers: int = field(
        default=1,
        metadata={
            "type": "Element",
        },
    )
    asymptotic_replications: int = field(
        default=20000,
        metadata={
            "type": "Element",
        },
    )
