from partial_ranking.report.edge_probability import EdgeProbability
from partial_ranking.report.experiment import Experiment
from partial_ranking.report.frequency_row import FrequencyRow
from partial_ranking.report.frequency_table import FrequencyTable
from partial_ranking.report.hypothesis_test import TestResult
from partial_ranking.report.metadata import Metadata
from partial_ranking.report.ranking_coverage import RankingCoverage
from partial_ranking.report.ranking_set import RankingSet
from partial_ranking.report.report import SCHEMA_VERSION, Report
from partial_ranking.report.results import Results
from partial_ranking.report.run_config import RunConfig
from partial_ranking.report.team_ranks import TeamRanks
from partial_ranking.report.team_value import TeamValue

__all__ = [
    "EdgeProbability",
    "Experiment",
    "FrequencyRow",
    "FrequencyTable",
    "Metadata",
    "RankingCoverage",
    "RankingSet",
    "SCHEMA_VERSION",
    "Report",
    "Results",
    "RunConfig",
    "TeamRanks",
    "TeamValue",
    "TestResult",
]
