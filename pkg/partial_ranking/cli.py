"""
Command Line Interface
======================

Define the ``partial-ranking`` command:

-   ``ident``: Identified set of given win probabilities.
-   ``test``: Test of a ranking against outcome data.
-   ``confset``: Confidence set for the ranking by test inversion.
-   ``mc``: Monte Carlo experiment.
-   ``btl``: Merits of the linear parametric model with known link.
-   ``pagerank``: *PageRank* ranking of a transition table.

Every command emits a *JSON* report on the standard output, or to the
``--out`` file, the diagnostics being written on the standard error. The exit
code is 0 on success, 1 on usage errors, 2 on data errors and 3 on
computation errors.
"""

from __future__ import annotations

import argparse
import logging
import sys
from collections.abc import Callable, Sequence
from dataclasses import replace
from typing import NoReturn

from xsdata.exceptions import ParserError

import partial_ranking.report
from partial_ranking import __application_name__, __version__
from partial_ranking.core import (
    MAXIMUM_ENUMERATION_TEAMS,
    Ranking,
    TournamentGraph,
    ranks_from_merits,
)
from partial_ranking.exceptions import (
    ConvergenceError,
    DataError,
    EnumerationBudgetError,
    InconsistentSystemError,
)
from partial_ranking.hints import LiteralMethod, NDArrayInt
from partial_ranking.ident import (
    LINK_FUNCTIONS,
    identified_set,
    solve_linear_parametric,
)
from partial_ranking.inference import (
    DEFAULT_REPLICATIONS_ASYMPTOTIC,
    FiniteSampleOptions,
    RankingTester,
)
from partial_ranking.io import (
    frequency_table_to_report,
    ranking_set_to_report,
    read_edges_csv,
    read_experiment_config,
    read_probabilities_csv,
    report_metadata,
    test_outcome_to_report,
    write_frequency_csv,
    write_report,
)
from partial_ranking.montecarlo import run_experiment
from partial_ranking.transitions import (
    DEFAULT_DAMPING,
    pagerank,
    pagerank_scores,
    read_transitions_csv,
    transitions_to_outcomes,
)

__author__ = "Partial Ranking Developers"
__copyright__ = "Copyright 2026 Partial Ranking Developers"
__license__ = "BSD-3-Clause - https://opensource.org/licenses/BSD-3-Clause"
__maintainer__ = "Partial Ranking Developers"
__email__ = "partial-ranking-developers@googlegroups.com"
__status__ = "Production"

__all__ = [
    "EXIT_SUCCESS",
    "EXIT_USAGE",
    "EXIT_DATA",
    "EXIT_COMPUTATION",
    "UsageError",
    "build_parser",
    "run_cli",
    "main",
]

LOGGER = logging.getLogger(__name__)

EXIT_SUCCESS: int = 0
EXIT_USAGE: int = 1
EXIT_DATA: int = 2
EXIT_COMPUTATION: int = 3

METHOD_ALIASES: dict[str, LiteralMethod] = {
    "fs": "finite_sample",
    "finite_sample": "finite_sample",
    "as": "asymptotic",
    "asymptotic": "asymptotic",
}


class UsageError(Exception):
    """Exception raised for invalid command lines."""


class _ArgumentParser(argparse.ArgumentParser):
    """Argument parser raising :class:`UsageError` instead of exiting."""

    def error(self, message: str) -> NoReturn:
        raise UsageError(message)


def _normalisation(text: str) -> tuple[str, float]:
    """Parse a ``TEAM=VALUE`` normalisation."""

    team, separator, value = text.rpartition("=")
    if not separator or not team:
        msg = f'"{text}" is not a TEAM=VALUE normalisation!'
        raise argparse.ArgumentTypeError(msg)

    try:
        return team, float(value)
    except ValueError as error:
        msg = f'"{value}" is not a number!'
        raise argparse.ArgumentTypeError(msg) from error


def build_parser() -> argparse.ArgumentParser:
    """Return the ``partial-ranking`` argument parser."""

    common = _ArgumentParser(add_help=False)
    common.add_argument(
        "--out", help="Report file, the standard output is used otherwise."
    )
    common.add_argument(
        "--verbose", action="store_true", help="Log debug records on stderr."
    )

    testing = _ArgumentParser(add_help=False)
    testing.add_argument("edges", help="Per-edge win counts CSV file.")
    testing.add_argument("--alpha", type=float, default=0.05, help="Test level.")
    testing.add_argument(
        "--method",
        choices=sorted(METHOD_ALIASES),
        default="fs",
        help="Finite sample (fs) or asymptotic (as) p-value.",
    )
    testing.add_argument("--seed", type=int, default=0, help="Random seed.")
    testing.add_argument(
        "--reps",
        type=int,
        default=DEFAULT_REPLICATIONS_ASYMPTOTIC,
        help="Simulated datasets of the asymptotic p-value.",
    )

    parser = _ArgumentParser(
        prog="partial-ranking",
        description="Identified sets, tests and confidence sets for rankings "
        "from pairwise interactions.",
    )
    parser.add_argument(
        "--version",
        action="version",
        version=f"{__application_name__} {__version__}",
    )
    commands = parser.add_subparsers(dest="command", required=True)

    ident = commands.add_parser(
        "ident", parents=[common], help="Identified set of win probabilities."
    )
    ident.add_argument("probabilities", help="Per-edge win probabilities CSV file.")
    ident.add_argument("--allow-ties", action="store_true")
    ident.add_argument(
        "--model",
        choices=("nonparametric", "semiparametric"),
        default="nonparametric",
    )
    ident.add_argument("--tolerance", type=float, default=0.0)

    test = commands.add_parser(
        "test", parents=[common, testing], help="Test a ranking."
    )
    test.add_argument(
        "--ranking", required=True, help='Comma separated ranks, e.g., "2,1,3".'
    )

    confset = commands.add_parser(
        "confset", parents=[common, testing], help="Confidence set for the ranking."
    )
    confset.add_argument("--allow-ties", action="store_true")

    mc = commands.add_parser(
        "mc", parents=[common], help="Monte Carlo experiment."
    )
    mc.add_argument("config", help="Experiment JSON file.")
    mc.add_argument("--workers", type=int, help="Worker processes.")
    mc.add_argument("--frequency-csv", help="Rank frequency table CSV file.")

    btl = commands.add_parser(
        "btl", parents=[common], help="Linear parametric merits."
    )
    btl.add_argument("probabilities", help="Per-edge win probabilities CSV file.")
    btl.add_argument("--link", choices=sorted(LINK_FUNCTIONS), default="btl")
    btl.add_argument(
        "--normalize",
        type=_normalisation,
        help="Merit normalisation TEAM=VALUE, the first team is set to 0 "
        "otherwise.",
    )

    page_rank = commands.add_parser(
        "pagerank", parents=[common], help="PageRank ranking of transitions."
    )
    page_rank.add_argument("transitions", help="Transitions CSV file.")
    page_rank.add_argument("--damping", type=float, default=DEFAULT_DAMPING)
    page_rank.add_argument(
        "--min-games",
        type=int,
        help="Restrict to the entities with a pair of at least that many "
        "transitions.",
    )

    return parser


def _team(graph: TournamentGraph, name: str) -> int:
    """Return the identifier of given team name."""

    names = graph.names or tuple(str(team) for team in graph.teams)
    if name not in names:
        msg = f'Team "{name}" is unknown!'
        raise DataError(msg)

    return names.index(name) + 1


def _teams(graph: TournamentGraph) -> list[str]:
    return [graph.team_name(team) for team in graph.teams]


def _ident(
    args: argparse.Namespace,
) -> tuple[partial_ranking.report.RunConfig, partial_ranking.report.Results]:
    p = read_probabilities_csv(args.probabilities)
    identified = identified_set(
        p, p.graph, args.allow_ties, args.model, tol=args.tolerance
    )

    return (
        partial_ranking.report.RunConfig(
            inputs=[args.probabilities],
            allow_ties=args.allow_ties,
            model=args.model,
            tolerance=args.tolerance,
        ),
        partial_ranking.report.Results(
            teams=_teams(p.graph),
            identified_set=ranking_set_to_report(identified, p.graph),
        ),
    )


def _tester(
    args: argparse.Namespace, graph: TournamentGraph, n: NDArrayInt
) -> RankingTester:
    return RankingTester(
        graph,
        n,
        METHOD_ALIASES[args.method],
        FiniteSampleOptions(seed=args.seed),
        args.reps,
        args.seed,
    )


def _testing_config(
    args: argparse.Namespace, **kwargs: object
) -> partial_ranking.report.RunConfig:
    method = METHOD_ALIASES[args.method]

    return partial_ranking.report.RunConfig(
        inputs=[args.edges],
        seed=args.seed,
        method=method,
        alpha=args.alpha,
        replications=args.reps if method == "asymptotic" else None,
        **kwargs,  # pyright: ignore
    )


def _test(
    args: argparse.Namespace,
) -> tuple[partial_ranking.report.RunConfig, partial_ranking.report.Results]:
    data = read_edges_csv(args.edges)
    ranking = Ranking.parse(args.ranking)
    outcome = _tester(args, data.graph, data.n).test(data, ranking, args.alpha)

    return (
        _testing_config(args, ranking=str(ranking)),
        partial_ranking.report.Results(
            teams=_teams(data.graph), test=test_outcome_to_report(outcome)
        ),
    )


def _confset(
    args: argparse.Namespace,
) -> tuple[partial_ranking.report.RunConfig, partial_ranking.report.Results]:
    data = read_edges_csv(args.edges)
    if not 0 < args.alpha < 1:
        msg = f'Level "{args.alpha}" is outside of the (0, 1) range!'
        raise DataError(msg)

    confidence = _tester(args, data.graph, data.n).confidence_set(
        data, args.alpha, args.allow_ties, MAXIMUM_ENUMERATION_TEAMS
    )

    return (
        _testing_config(args, allow_ties=args.allow_ties),
        partial_ranking.report.Results(
            teams=_teams(data.graph),
            confidence_set=ranking_set_to_report(confidence, data.graph),
        ),
    )


def _mc(
    args: argparse.Namespace,
) -> tuple[partial_ranking.report.RunConfig, partial_ranking.report.Results]:
    config = read_experiment_config(args.config)
    if args.workers is not None:
        if args.workers < 1:
            msg = f"Worker count must be positive, got {args.workers}!"
            raise DataError(msg)

        config = replace(config, workers=args.workers)

    table = run_experiment(config)
    if args.frequency_csv:
        write_frequency_csv(
            table, args.frequency_csv, _teams(config.graph), standard_errors=True
        )

    return (
        partial_ranking.report.RunConfig(
            inputs=[args.config],
            seed=config.seed,
            method=config.method,
            alpha=config.alpha,
            replications=config.replications,
            allow_ties=config.allow_ties,
            games_per_edge=config.games_per_edge,
            workers=config.workers,
        ),
        partial_ranking.report.Results(
            teams=_teams(config.graph),
            frequency_table=frequency_table_to_report(table, config.graph),
        ),
    )


def _btl(
    args: argparse.Namespace,
) -> tuple[partial_ranking.report.RunConfig, partial_ranking.report.Results]:
    p = read_probabilities_csv(args.probabilities)
    team, value = args.normalize or (p.graph.team_name(1), 0.0)
    merits = solve_linear_parametric(
        p, p.graph, LINK_FUNCTIONS[args.link], _team(p.graph, team), value
    )
    ranking = ranks_from_merits(merits)

    return (
        partial_ranking.report.RunConfig(
            inputs=[args.probabilities],
            link=args.link,
            normalize_team=team,
            normalize_value=value,
        ),
        partial_ranking.report.Results(
            teams=_teams(p.graph),
            merits=[
                partial_ranking.report.TeamValue(
                    p.graph.team_name(team),
                    float(merits.theta[team - 1]),
                    ranking.rank(team),
                )
                for team in p.graph.teams
            ],
            ranking=str(ranking),
        ),
    )


def _pagerank(
    args: argparse.Namespace,
) -> tuple[partial_ranking.report.RunConfig, partial_ranking.report.Results]:
    table = read_transitions_csv(args.transitions)
    if args.min_games is not None:
        data = transitions_to_outcomes(table, args.min_games)
        table = table.restrict(_teams(data.graph))

    scores = pagerank_scores(table, args.damping)
    ranking = pagerank(table, args.damping)

    return (
        partial_ranking.report.RunConfig(
            inputs=[args.transitions],
            damping=args.damping,
            min_games=args.min_games,
        ),
        partial_ranking.report.Results(
            teams=list(table.names),
            scores=[
                partial_ranking.report.TeamValue(
                    name, float(scores[i]), ranking.rank(i + 1)
                )
                for i, name in enumerate(table.names)
            ],
            ranking=str(ranking),
        ),
    )


COMMANDS: dict[
    str,
    Callable[
        [argparse.Namespace],
        tuple[partial_ranking.report.RunConfig, partial_ranking.report.Results],
    ],
] = {
    "ident": _ident,
    "test": _test,
    "confset": _confset,
    "mc": _mc,
    "btl": _btl,
    "pagerank": _pagerank,
}


def _configure_logging(verbose: bool) -> None:
    """Route the log records and the warnings to the standard error."""

    handler = logging.StreamHandler(sys.stderr)
    handler.setFormatter(logging.Formatter("%(levelname)s: %(name)s: %(message)s"))

    logger = logging.getLogger("partial_ranking")
    logger.handlers[:] = [handler]
    logger.setLevel(logging.DEBUG if verbose else logging.WARNING)

    warnings_logger = logging.getLogger("py.warnings")
    warnings_logger.handlers[:] = [handler]
    logging.captureWarnings(True)


def run_cli(argv: Sequence[str] | None = None) -> int:
    """
    Run the ``partial-ranking`` command with given arguments.

    Returns
    -------
    :class:`int`
        Exit code.

    Examples
    --------
    >>> run_cli(["unknown"])  # doctest: +SKIP
    1
    """

    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as error:
        parser.print_usage(sys.stderr)
        print(f"error: {error}", file=sys.stderr)
        return EXIT_USAGE
    except SystemExit as error:
        return error.code if isinstance(error.code, int) else EXIT_SUCCESS

    _configure_logging(args.verbose)

    try:
        config, results = COMMANDS[args.command](args)
        report = partial_ranking.report.Report(
            command=args.command,
            config=config,
            results=results,
            metadata=report_metadata(),
        )
        document = write_report(report, args.out)
    except (DataError, ParserError, OSError) as error:
        print(f"error: {error}", file=sys.stderr)
        return EXIT_DATA
    except (
        EnumerationBudgetError,
        ConvergenceError,
        InconsistentSystemError,
    ) as error:
        print(f"error: {error}", file=sys.stderr)
        return EXIT_COMPUTATION
    finally:
        logging.captureWarnings(False)

    if args.out is None:
        print(document)
    else:
        LOGGER.info('Report written to "%s".', args.out)

    return EXIT_SUCCESS


def main() -> NoReturn:
    """Entry point of the ``partial-ranking`` console script."""

    sys.exit(run_cli())


if __name__ == "__main__":
    main()
