"""Root element of a report."""

from __future__ import annotations

from dataclasses import dataclass, field

from partial_ranking.report.metadata import Metadata
from partial_ranking.report.results import Results
from partial_ranking.report.run_config import RunConfig

__all__ = ["SCHEMA_VERSION", "Report"]

SCHEMA_VERSION: str = "1.0"


@dataclass
class Report:
    """
    Machine readable report of a command.

    Parameters
    ----------
    schema_version
    command
        Command name, e.g., ``test``.
    config
    results
    metadata
    """

    schema_version: str = field(
        default=SCHEMA_VERSION,
        metadata={
            "type": "Element",
            "required": True,
        },
    )
    command: None | str = field(
        default=None,
        metadata={
            "type": "Element",
            "required": True,
        },
    )
    config: None | RunConfig = field(
        default=None,
        metadata={
            "type": "Element",
        },
    )
    results: None | Results = field(
        default=None,
        metadata={
            "type": "Element",
        },
    )
    metadata: None | Metadata = field(
        default=None,
        metadata={
            "type": "Element",
        },
    )
