"""
Transitions Tests
=================

This module defines tests for the transition tables, their conversion into
outcome data and the *PageRank* baseline of the
:mod:`partial_ranking.transitions` module.
"""

import json
import os
import shutil
import tempfile
import unittest

import numpy as np
from numpy.testing import assert_allclose, assert_array_equal

import partial_ranking.report
from partial_ranking import (
    DataError,
    DataWarning,
    TransitionTable,
    is_connected,
    pagerank,
    pagerank_scores,
    read_transitions_csv,
    transitions_to_outcomes,
    write_report,
)
from partial_ranking.inference import test_ranking
from partial_ranking.io import test_outcome_to_report

ROOT_RESOURCES: str = os.path.join(os.path.dirname(__file__), "resources")

TRANSITIONS: str = os.path.join(ROOT_RESOURCES, "firms_transitions.csv")

FIRMS: tuple[str, ...] = tuple(f"F{i}" for i in range(1, 11))


class TestReadTransitionsCsv(unittest.TestCase):
    """
    Define :func:`partial_ranking.read_transitions_csv` definition unit tests
    methods.
    """

    def setUp(self) -> None:
        """Initialise the common tests attributes."""

        self._temporary_directory = tempfile.mkdtemp()

    def tearDown(self) -> None:
        """After tests actions."""

        shutil.rmtree(self._temporary_directory)

    def _write(self, content: str) -> str:
        path = os.path.join(self._temporary_directory, "transitions.csv")
        with open(path, "w", encoding="utf-8") as file:
            file.write(content)

        return path

    def test_read_transitions_csv(self) -> None:
        """Test :func:`partial_ranking.read_transitions_csv` definition."""

        table = read_transitions_csv(TRANSITIONS)

        self.assertEqual(table.names, FIRMS)
        self.assertEqual(table.count("F1", "F2"), 10)
        self.assertEqual(table.count("F2", "F1"), 30)
        self.assertEqual(table.count("F6", "F1"), 0)
        self.assertEqual(table.dropped_self_transitions, 0)

    def test_self_transitions(self) -> None:
        """Test that self-transitions are dropped with a warning."""

        path = self._write("from,to,count\nF1,F2,3\nF1,F1,7\n")

        with self.assertWarns(DataWarning):
            table = read_transitions_csv(path)

        self.assertEqual(table.dropped_self_transitions, 7)
        self.assertEqual(table.count("F1", "F2"), 3)

    def test_invalid_files(self) -> None:
        """Test that malformed files are rejected with their line number."""

        for content, message in (
            ("F1,F2,3\n", "header"),
            ("from,to,count\n", "empty"),
            ("from,to,count\nF1,F2,x\n", "line 2"),
            ("from,to,count\nF1,F2,3\nF2,F1,-1\n", "line 3"),
            ("from,to,count\nF1,,3\n", "line 2"),
            ("from,to,count\nF1,F2\n", "line 2"),
        ):
            with self.subTest(content=content):
                with self.assertRaises(DataError) as context:
                    read_transitions_csv(self._write(content))

                self.assertIn(message, str(context.exception))


class TestTransitionTable(unittest.TestCase):
    """
    Define :class:`partial_ranking.TransitionTable` class unit tests methods.
    """

    def test_invalid_tables(self) -> None:
        """Test that invalid counts and names are rejected."""

        for names, counts in (
            (("A", "B"), [[0, 1]]),
            (("A", "B"), [[0, -1], [0, 0]]),
            (("A", "B"), [[1, 0], [0, 0]]),
            (("A", "A"), [[0, 1], [0, 0]]),
        ):
            with self.subTest(names=names, counts=counts):
                with self.assertRaises(DataError):
                    TransitionTable(names, np.array(counts))

    def test_restrict(self) -> None:
        """Test the restriction to a subset of entities."""

        table = TransitionTable.from_mapping(
            {("A", "B"): 1, ("B", "C"): 2, ("C", "A"): 3}
        )
        restricted = table.restrict(["C", "A"])

        self.assertEqual(restricted.names, ("C", "A"))
        assert_array_equal(restricted.counts, [[0, 3], [0, 0]])

        with self.assertRaises(DataError):
            table.restrict(["D"])

    def test_relabel(self) -> None:
        """Test that relabeling moves the counts with the entities."""

        table = TransitionTable.from_mapping({("A", "B"): 1, ("B", "C"): 2})
        relabelled = table.relabel((3, 1, 2))

        self.assertEqual(relabelled.names, ("B", "C", "A"))
        self.assertEqual(relabelled.count("B", "C"), 2)
        self.assertEqual(relabelled.count("A", "B"), 1)


class TestTransitionsToOutcomes(unittest.TestCase):
    """
    Define :func:`partial_ranking.transitions_to_outcomes` definition unit
    tests methods.
    """

    def setUp(self) -> None:
        """Initialise the common tests attributes."""

        self._table = read_transitions_csv(TRANSITIONS)

    def test_transitions_to_outcomes(self) -> None:
        """Test :func:`partial_ranking.transitions_to_outcomes` definition."""

        data = transitions_to_outcomes(self._table)

        self.assertEqual(data.graph.names, FIRMS)
        self.assertEqual(
            data.graph.edges,
            (
                (1, 2),
                (1, 3),
                (2, 3),
                (2, 4),
                (3, 5),
                (4, 5),
                (4, 6),
                (5, 7),
                (6, 7),
                (6, 8),
                (7, 9),
                (8, 9),
                (8, 10),
                (9, 10),
            ),
        )
        assert_array_equal(
            data.n, [40, 24, 28, 24, 28, 22, 30, 24, 26, 24, 22, 24, 24, 22]
        )
        self.assertEqual(data.wins(1, 2), 30)
        self.assertEqual(data.wins(2, 1), 10)
        self.assertEqual(data.wins(8, 10), 21)
        self.assertEqual(data.wins(10, 8), 3)

    def test_min_games(self) -> None:
        """Test that the pairs below the threshold are dropped."""

        for min_games, names in (
            (1, FIRMS),
            (25, ("F1", "F2", "F3", "F4", "F5", "F6", "F7")),
            (30, ("F1", "F2", "F4", "F6")),
            (40, ("F1", "F2")),
        ):
            with self.subTest(min_games=min_games):
                data = transitions_to_outcomes(self._table, min_games)

                self.assertEqual(data.graph.names, names)
                self.assertTrue(np.all(data.n >= min_games))

        self.assertEqual(transitions_to_outcomes(self._table, 1).graph.n_edges, 16)

        for min_games in (0, 41):
            with self.subTest(min_games=min_games):
                with self.assertRaises(DataError):
                    transitions_to_outcomes(self._table, min_games)


class TestPagerank(unittest.TestCase):
    """
    Define :func:`partial_ranking.pagerank_scores` and
    :func:`partial_ranking.pagerank` definitions unit tests methods.
    """

    def test_symmetric(self) -> None:
        """Test that symmetric transitions yield equal scores."""

        table = TransitionTable.from_mapping({("F1", "F2"): 5, ("F2", "F1"): 5})

        assert_allclose(pagerank_scores(table), [0.5, 0.5])
        self.assertEqual(pagerank(table).r, (1, 1))

    def test_star(self) -> None:
        """Test that the hub of a star is ranked first."""

        table = TransitionTable.from_mapping(
            {("F2", "F1"): 5, ("F3", "F1"): 5, ("F4", "F1"): 5}
        )

        self.assertEqual(pagerank(table).r, (2, 1, 2, 2))

    def test_scores(self) -> None:
        """Test that the scores are a probability distribution."""

        table = read_transitions_csv(TRANSITIONS)

        for damping in (0.5, 0.85, 0.99):
            with self.subTest(damping=damping):
                scores = pagerank_scores(table, damping)

                self.assertAlmostEqual(float(scores.sum()), 1)
                self.assertTrue(np.all(scores > 0))

    def test_relabel(self) -> None:
        """Test that relabeling the entities permutes the ranking."""

        table = read_transitions_csv(TRANSITIONS)
        permutation = (4, 6, 1, 5, 2, 3, 10, 8, 9, 7)

        self.assertEqual(
            pagerank(table.relabel(permutation)),
            pagerank(table).relabel(permutation),
        )

    def test_invalid_inputs(self) -> None:
        """Test that empty tables and invalid damping factors are rejected."""

        table = TransitionTable.from_mapping({("F1", "F2"): 5})

        for damping in (0, 1, 1.5):
            with self.subTest(damping=damping):
                with self.assertRaises(DataError):
                    pagerank_scores(table, damping)

        with self.assertRaises(DataError):
            pagerank_scores(TransitionTable(("A", "B"), np.zeros((2, 2))))


class TestPagerankTestPipeline(unittest.TestCase):
    """
    Define the test of the *PageRank* ranking of a transition table unit
    tests methods.
    """

    def _report(self, seed: int) -> str:
        """Return the *JSON* report of the test of the *PageRank* ranking."""

        table = read_transitions_csv(TRANSITIONS)
        data = transitions_to_outcomes(table)
        ranking = pagerank(table.restrict(data.graph.names))
        outcome = test_ranking(
            data, ranking, 0.1, "asymptotic", replications=300, seed=seed
        )

        return write_report(
            partial_ranking.report.Report(
                command="test",
                config=partial_ranking.report.RunConfig(
                    inputs=[TRANSITIONS],
                    seed=seed,
                    method="asymptotic",
                    alpha=0.1,
                    replications=300,
                    ranking=str(ranking),
                ),
                results=partial_ranking.report.Results(
                    teams=list(data.graph.names),
                    test=test_outcome_to_report(outcome),
                ),
            )
        )

    def test_pipeline(self) -> None:
        """
        Test that the *PageRank* ranking of the retained firms is tested and
        that the report is reproduced by the same seed.
        """

        table = read_transitions_csv(TRANSITIONS)
        data = transitions_to_outcomes(table)

        self.assertEqual(data.graph.q, 10)
        self.assertTrue(is_connected(data.graph))

        document = self._report(5)
        result = json.loads(document)["results"]["test"]

        self.assertEqual(len(result["ranking"].split(",")), 10)
        self.assertGreaterEqual(result["statistic"], 0)
        self.assertTrue(0 <= result["p_value"] <= 1)
        self.assertEqual(result["replications"], 300)
        self.assertEqual(document, self._report(5))


if __name__ == "__main__":
    unittest.main()
