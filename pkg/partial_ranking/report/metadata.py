"""Provenance section of a report."""

from __future__ import annotations

from dataclasses import dataclass, field

__all__ = ["Metadata"]


@dataclass
class Metadata:
    """
    Software versions and creation time, kept apart from the results so that
    reruns compare equal.
    """

    partial_ranking_version: None | str = field(
        default=None,
        metadata={
            "type": "Element",
        },
    )
    python_version: None | str = field(
        default=None,
        metadata={
            "type": "Element",
        },
    )
    numpy_version: None | str = field(
        default=None,
        metadata={
            "type": "Element",
        },
    )
    scipy_version: None | str = field(
        default=None,
        metadata={
            "type": "Element",
        },
    )
    created: None | str = field(
        default=None,
        metadata={
            "type": "Element",
        },
    )
