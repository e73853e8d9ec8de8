"""
Inference Tests
===============

This module defines tests for the restricted estimator, the likelihood ratio
statistic, the finite sample and asymptotic p-values, the ranking tests and
the confidence sets of the :mod:`partial_ranking.inference` module.
"""

import math
import unittest

import numpy as np
from numpy.testing import assert_allclose

from partial_ranking import (
    AsymptoticNull,
    DataError,
    EnumerationBudgetError,
    FiniteSampleNull,
    FiniteSampleOptions,
    OutcomeData,
    Ranking,
    RankingTester,
    TournamentGraph,
    build_constraint_system,
    confidence_set,
    enumerate_outcomes,
    enumerate_rankings,
    pvalue_asymptotic,
    pvalue_finite_sample,
    region_probability,
    region_probability_gradient,
    restricted_mle,
    strict_threshold,
    unrestricted_mle,
)
from partial_ranking.inference import test_ranking, test_statistic

TWO_EDGES = TournamentGraph(3, [(1, 2), (3, 2)], ("A", "B", "C"))
TWO_EDGES_DATA = OutcomeData.from_mapping(TWO_EDGES, {(1, 2): (9, 8), (3, 2): (2, 0)})
TWO_EDGES_SYSTEM = build_constraint_system(TWO_EDGES, Ranking((2, 1, 3)))
CHAIN = TournamentGraph(4, [(1, 2), (2, 3), (3, 4)])


class TestRestrictedMle(unittest.TestCase):
    """
    Define :func:`partial_ranking.unrestricted_mle` and
    :func:`partial_ranking.restricted_mle` definitions unit tests methods.
    """

    def test_unrestricted_mle(self) -> None:
        """Test :func:`partial_ranking.unrestricted_mle` definition."""

        p_hat = unrestricted_mle(TWO_EDGES_DATA)

        self.assertAlmostEqual(p_hat.oriented(1, 2), 8 / 9)
        self.assertEqual(p_hat.oriented(3, 2), 0)

        graph = TournamentGraph(2, [(1, 2)])
        self.assertEqual(float(unrestricted_mle(OutcomeData(graph, [4], [4])).p[0]), 1)
        self.assertEqual(
            float(unrestricted_mle(OutcomeData(graph, [4], [2])).p[0]), 0.5
        )

    def test_two_edges(self) -> None:
        """Test the restricted estimate of the two edges design."""

        p_hat = unrestricted_mle(TWO_EDGES_DATA)

        for method in ("active_set", "minmax"):
            with self.subTest(method=method):
                fit = restricted_mle(
                    p_hat, TWO_EDGES_DATA.n, TWO_EDGES_SYSTEM, method
                )

                assert_allclose(fit.directed, [0.5, 0.0], atol=1e-12)
                self.assertAlmostEqual(fit.objective, 9 * (8 / 9 - 0.5) ** 2)
                self.assertTrue(TWO_EDGES_SYSTEM.is_satisfied(fit.p_star, 1e-12))

    def test_feasible(self) -> None:
        """Test that a feasible estimate is its own restricted estimate."""

        fit = restricted_mle([0.3, 0.9], [9, 2], TWO_EDGES_SYSTEM)

        assert_allclose(fit.p_star, [0.3, 0.9])
        self.assertEqual(fit.objective, 0)

    def test_methods_agree(self) -> None:
        """Test that both projection methods agree on tie-free rankings."""

        rng = np.random.default_rng(3)
        for ranking in enumerate_rankings(4):
            system = build_constraint_system(CHAIN, ranking)
            for _ in range(5):
                p_hat = rng.uniform(0, 1, CHAIN.n_edges)
                n = rng.integers(1, 30, CHAIN.n_edges)

                with self.subTest(ranking=str(ranking), p_hat=p_hat.tolist()):
                    assert_allclose(
                        restricted_mle(p_hat, n, system, "active_set").p_star,
                        restricted_mle(p_hat, n, system, "minmax").p_star,
                        atol=1e-9,
                    )

    def test_grid_oracle(self) -> None:
        """
        Test the restricted estimate against a brute-force search over a grid
        of the unit square.
        """

        grid = np.linspace(0, 1, 1001)
        points = np.stack([axis.ravel() for axis in np.meshgrid(grid, grid)])
        rng = np.random.default_rng(7)
        for ranking in enumerate_rankings(3, allow_ties=True):
            system = build_constraint_system(TWO_EDGES, ranking)
            G, h = system.inequalities
            feasible = np.all(G @ points <= h[:, None] + 1e-9, axis=0)
            for _ in range(8):
                p_hat = rng.uniform(0, 1, 2)
                n = rng.integers(5, 9, 2)
                objective = (n[:, None] * (points - p_hat[:, None]) ** 2).sum(axis=0)
                best = int(np.argmin(np.where(feasible, objective, np.inf)))
                fit = restricted_mle(p_hat, n, system)

                with self.subTest(ranking=str(ranking), p_hat=p_hat.tolist()):
                    assert_allclose(fit.p_star, points[:, best], atol=2e-3)
                    self.assertLessEqual(fit.objective, objective[best] + 1e-12)

    def test_invalid_inputs(self) -> None:
        """Test that invalid inputs are rejected."""

        tie = build_constraint_system(TWO_EDGES, Ranking((1, 1, 3)))

        with self.assertRaises(DataError):
            restricted_mle([0.9, 0.9], [9, 2], tie, "minmax")

        with self.assertRaises(DataError):
            restricted_mle([0.9, 0.9], [9, 2], TWO_EDGES_SYSTEM, "simplex")  # pyright: ignore

        with self.assertRaises(DataError):
            restricted_mle([0.9, 0.9], [9, 0], TWO_EDGES_SYSTEM)

        with self.assertRaises(DataError):
            restricted_mle([0.9], [9], TWO_EDGES_SYSTEM)


class TestTestStatistic(unittest.TestCase):
    """
    Define :func:`partial_ranking.test_statistic` definition unit tests
    methods.
    """

    def test_test_statistic(self) -> None:
        """Test :func:`partial_ranking.test_statistic` definition."""

        expected = 2 * 9 * (8 / 9 * math.log(16 / 9) + 1 / 9 * math.log(2 / 9))

        self.assertAlmostEqual(test_statistic([8 / 9, 1], [0.5, 1], [9, 2]), expected)
        self.assertAlmostEqual(
            test_statistic([8 / 9, 1], [0.5, 1], [9, 2]), 6.1977, places=4
        )
        self.assertAlmostEqual(
            test_statistic([1, 1], [0.5, 0.5], [9, 2]), 22 * math.log(2)
        )

    def test_zero(self) -> None:
        """Test that the statistic vanishes at the restricted estimate."""

        self.assertEqual(test_statistic([0.3, 1.0], [0.3, 1.0], [9, 2]), 0)

    def test_fit(self) -> None:
        """Test the statistic of a restricted estimate."""

        p_hat = unrestricted_mle(TWO_EDGES_DATA)
        fit = restricted_mle(p_hat, TWO_EDGES_DATA.n, TWO_EDGES_SYSTEM)

        self.assertAlmostEqual(
            test_statistic(p_hat, fit, TWO_EDGES_DATA.n), 6.1977, places=4
        )


class TestStrictThreshold(unittest.TestCase):
    """
    Define :func:`partial_ranking.strict_threshold` definition unit tests
    methods.
    """

    def test_strict_threshold(self) -> None:
        """Test :func:`partial_ranking.strict_threshold` definition."""

        self.assertEqual(strict_threshold(2.0), 2.0 + 2e-9)
        self.assertEqual(strict_threshold(0.5), 0.5 + 1e-9)
        self.assertEqual(strict_threshold(2.0, 0.0), 2.0)

        for t in (0.0, -1e-12, -3.0):
            with self.subTest(t=t):
                self.assertEqual(strict_threshold(t), -np.inf)


class TestRegionProbability(unittest.TestCase):
    """
    Define :func:`partial_ranking.enumerate_outcomes`,
    :func:`partial_ranking.region_probability` and
    :func:`partial_ranking.region_probability_gradient` definitions unit tests
    methods.
    """

    def test_enumerate_outcomes(self) -> None:
        """Test :func:`partial_ranking.enumerate_outcomes` definition."""

        outcomes = enumerate_outcomes([9, 2])

        self.assertEqual(outcomes.shape, (30, 2))
        self.assertEqual(len({tuple(row) for row in outcomes}), 30)

        with self.assertRaises(EnumerationBudgetError):
            enumerate_outcomes([9, 2], budget=29)

    def test_total_probability(self) -> None:
        """Test that the whole outcome space has probability one."""

        outcomes = enumerate_outcomes([4, 3, 2])

        self.assertAlmostEqual(
            region_probability([0.2, 0.5, 0.9], [4, 3, 2], outcomes), 1
        )

    def test_polynomial(self) -> None:
        """Test a region probability against its closed form polynomial."""

        outcomes = enumerate_outcomes([9, 2])
        region = (outcomes[:, 0] == 9) | ((outcomes[:, 0] == 0) & (outcomes[:, 1] == 2))

        for a, c in ((0.5, 0.5), (0.18, 0.18), (0.3, 0.1)):
            with self.subTest(a=a, c=c):
                self.assertAlmostEqual(
                    region_probability([a, c], [9, 2], outcomes, region),
                    a**9 + (1 - a) ** 9 * c**2,
                )

    def test_gradient(self) -> None:
        """Test the gradient against central finite differences."""

        outcomes = enumerate_outcomes([5, 3])
        region = outcomes.sum(axis=1) % 3 == 0
        p = np.array([0.35, 0.6])

        gradient = region_probability_gradient(p, [5, 3], outcomes, region)

        h = 1e-6
        for e in range(2):
            step = np.zeros(2)
            step[e] = h
            expected = (
                region_probability(p + step, [5, 3], outcomes, region)
                - region_probability(p - step, [5, 3], outcomes, region)
            ) / (2 * h)

            with self.subTest(edge=e):
                self.assertAlmostEqual(float(gradient[e]), expected, places=6)


class TestFiniteSamplePValue(unittest.TestCase):
    """
    Define :class:`partial_ranking.FiniteSampleNull` class and
    :func:`partial_ranking.pvalue_finite_sample` definition unit tests
    methods.
    """

    def test_extreme_thresholds(self) -> None:
        """Test the p-values of the empty and full rejection regions."""

        null = FiniteSampleNull(TWO_EDGES_SYSTEM, [9, 2])

        self.assertEqual(null.pvalue(np.inf).p_value, 0)
        self.assertEqual(null.pvalue(-1).p_value, 1)

    def test_two_edges(self) -> None:
        """Test the p-value of the two edges design."""

        null = FiniteSampleNull(TWO_EDGES_SYSTEM, [9, 2])
        t = 2 * 9 * (8 / 9 * math.log(16 / 9) + 1 / 9 * math.log(2 / 9))
        result = null.pvalue(t)
        region = null.region(t)

        # The observed outcome does not strictly exceed its own statistic.
        observed = (null.outcomes[:, 0] == 8) & (null.outcomes[:, 1] == 2)
        self.assertFalse(bool(np.any(region & observed)))

        self.assertEqual(result.region_size, int(region.sum()))
        self.assertEqual(result.n_outcomes, 30)
        self.assertTrue(
            TWO_EDGES_SYSTEM.is_satisfied(result.argmax, 1e-9)
        )
        self.assertAlmostEqual(
            result.p_value,
            region_probability(result.argmax, [9, 2], null.outcomes, region),
        )
        for p in (np.full(2, 0.5), TWO_EDGES_SYSTEM.feasible_point()):
            self.assertGreaterEqual(
                result.p_value + 1e-9,
                region_probability(p, [9, 2], null.outcomes, region),
            )

        self.assertLess(result.p_value, 0.05)

    def test_cache(self) -> None:
        """Test that thresholds with the same region share their p-value."""

        null = FiniteSampleNull(TWO_EDGES_SYSTEM, [9, 2])

        self.assertIs(null.pvalue(6.0), null.pvalue(6.0))

    def test_pvalue_finite_sample(self) -> None:
        """Test :func:`partial_ranking.pvalue_finite_sample` definition."""

        p_value, argmax = pvalue_finite_sample(
            TWO_EDGES, [9, 2], np.inf, TWO_EDGES_SYSTEM
        )

        self.assertEqual(p_value, 0)
        self.assertEqual(argmax.shape, (2,))

        with self.assertRaises(DataError):
            pvalue_finite_sample(CHAIN, [9, 2, 2], 1.0, TWO_EDGES_SYSTEM)

    def test_budget(self) -> None:
        """Test that the enumeration budget is enforced."""

        null = FiniteSampleNull(
            TWO_EDGES_SYSTEM, [9, 2], FiniteSampleOptions(enumeration_budget=10)
        )

        with self.assertRaises(EnumerationBudgetError):
            null.pvalue(1.0)

    def test_non_positive_thresholds(self) -> None:
        """Test that non-positive thresholds reject every outcome tuple."""

        null = FiniteSampleNull(TWO_EDGES_SYSTEM, [9, 2])

        for t in (0.0, -1e-12, -1.0):
            with self.subTest(t=t):
                self.assertEqual(null.pvalue(t).p_value, 1)
                self.assertTrue(bool(np.all(null.region(t))))

    def test_monotonicity(self) -> None:
        """Test that the p-value does not increase with the threshold."""

        null = FiniteSampleNull(
            TWO_EDGES_SYSTEM, [9, 2], FiniteSampleOptions(random_starts=4)
        )
        thresholds = np.concatenate(
            [[-1.0, 0.0], np.unique(null.statistics), [np.inf]]
        )
        p_values = [null.pvalue(t).p_value for t in thresholds]

        for t, p_value, following in zip(thresholds, p_values, p_values[1:]):
            with self.subTest(t=t):
                self.assertGreaterEqual(p_value + 1e-6, following)

    def test_region_frequency(self) -> None:
        """
        Test that the rejection region probability matches the rejection
        frequency of simulated outcomes within three standard errors.
        """

        null = FiniteSampleNull(TWO_EDGES_SYSTEM, [9, 2])
        region = null.region(1.0)
        rejected = np.zeros((10, 3), dtype=bool)
        rejected[tuple(null.outcomes[region].T)] = True
        rng = np.random.default_rng(11)
        replications = 20000

        for p in ([0.5, 0.5], [0.3, 0.9], [0.2, 0.8]):
            with self.subTest(p=p):
                self.assertTrue(TWO_EDGES_SYSTEM.is_satisfied(np.array(p), 1e-12))

                probability = region_probability(p, [9, 2], null.outcomes, region)
                wins = rng.binomial([9, 2], p, (replications, 2))
                frequency = float(rejected[wins[:, 0], wins[:, 1]].mean())
                standard_error = math.sqrt(
                    probability * (1 - probability) / replications
                )

                self.assertLessEqual(
                    abs(frequency - probability), 3 * standard_error
                )


class TestAsymptoticPValue(unittest.TestCase):
    """
    Define :func:`partial_ranking.pvalue_asymptotic` definition unit tests
    methods.
    """

    def test_extreme_thresholds(self) -> None:
        """Test the p-values of extreme thresholds."""

        self.assertEqual(
            pvalue_asymptotic(TWO_EDGES, [9, 2], 1e6, TWO_EDGES_SYSTEM, 200), 0
        )
        self.assertEqual(
            pvalue_asymptotic(TWO_EDGES, [9, 2], -1, TWO_EDGES_SYSTEM, 200), 1
        )

    def test_determinism(self) -> None:
        """Test that a seed reproduces the p-value."""

        p_values = [
            pvalue_asymptotic(TWO_EDGES, [9, 2], 2.0, TWO_EDGES_SYSTEM, 500, 42)
            for _ in range(2)
        ]

        self.assertEqual(p_values[0], p_values[1])

    def test_invalid_inputs(self) -> None:
        """Test that invalid replications and seeds are rejected."""

        with self.assertRaises(DataError):
            pvalue_asymptotic(TWO_EDGES, [9, 2], 1.0, TWO_EDGES_SYSTEM, 0)

        with self.assertRaises(DataError):
            pvalue_asymptotic(TWO_EDGES, [9, 2], 1.0, TWO_EDGES_SYSTEM, 10, -1)

    def test_monotonicity(self) -> None:
        """Test that the p-value does not increase with the threshold."""

        null = AsymptoticNull(TWO_EDGES_SYSTEM, [9, 2], 500, 5)
        p_values = [null.pvalue(t) for t in np.linspace(-1, 16, 69)]

        self.assertTrue(bool(np.all(np.diff(p_values) <= 0)))
        self.assertEqual((p_values[0], p_values[-1]), (1, 0))

    def test_tolerance(self) -> None:
        """
        Test that simulated statistics equal to the threshold up to rounding
        are not counted, as in the finite sample p-value.
        """

        null = AsymptoticNull(TWO_EDGES_SYSTEM, [9, 2], 500, 5)
        statistic = float(null.sample[null.sample > 0][0])

        self.assertEqual(
            null.pvalue(statistic * (1 - 1e-12)), null.pvalue(statistic)
        )
        self.assertLess(null.pvalue(statistic), null.pvalue(statistic / 2))
        self.assertEqual(null.pvalue(-1e-12), 1)

        finite_sample = FiniteSampleNull(TWO_EDGES_SYSTEM, [9, 2])
        self.assertEqual(
            int(finite_sample.region(statistic * (1 - 1e-12)).sum()),
            int(finite_sample.region(statistic).sum()),
        )


class TestTestRanking(unittest.TestCase):
    """
    Define :func:`partial_ranking.test_ranking` definition and
    :class:`partial_ranking.RankingTester` class unit tests methods.
    """

    def test_feasible(self) -> None:
        """Test that an estimate satisfying the ranking is not rejected."""

        outcome = test_ranking(TWO_EDGES_DATA, Ranking((1, 2, 3)))

        self.assertEqual(outcome.statistic, 0)
        self.assertEqual(outcome.p_value, 1)
        self.assertFalse(outcome.reject)

    def test_two_edges(self) -> None:
        """Test that both methods reject the ranking of the two edges design."""

        finite_sample = test_ranking(TWO_EDGES_DATA, Ranking((2, 1, 3)), 0.05)

        self.assertTrue(finite_sample.reject)
        self.assertAlmostEqual(finite_sample.statistic, 6.1977, places=4)
        self.assertIn("converged", finite_sample.diagnostics)
        self.assertEqual(finite_sample.method, "finite_sample")

        asymptotic = test_ranking(
            TWO_EDGES_DATA,
            Ranking((2, 1, 3)),
            0.05,
            "asymptotic",
            replications=2000,
            seed=1,
        )

        self.assertTrue(asymptotic.reject)
        self.assertEqual(asymptotic.diagnostics["replications"], 2000)

    def test_invalid_inputs(self) -> None:
        """Test that invalid levels, methods and designs are rejected."""

        with self.assertRaises(DataError):
            test_ranking(TWO_EDGES_DATA, Ranking((2, 1, 3)), 1.5)

        with self.assertRaises(DataError):
            test_ranking(TWO_EDGES_DATA, Ranking((2, 1, 3)), method="exact")  # pyright: ignore

        with self.assertRaises(DataError):
            test_ranking(TWO_EDGES_DATA, Ranking((2, 1)))

        tester = RankingTester(TWO_EDGES, [9, 3])
        with self.assertRaises(DataError):
            tester.test(TWO_EDGES_DATA, Ranking((2, 1, 3)), 0.05)

    def test_tester_cache(self) -> None:
        """Test that the tester reuses its null distributions."""

        tester = RankingTester(TWO_EDGES, TWO_EDGES_DATA.n)
        ranking = Ranking((2, 1, 3))

        self.assertIs(tester.null(ranking), tester.null(ranking))
        self.assertIs(tester.system(ranking), tester.system(ranking))


class TestConfidenceSet(unittest.TestCase):
    """
    Define :func:`partial_ranking.confidence_set` definition unit tests
    methods.
    """

    def test_dominant_team(self) -> None:
        """Test that a dominant team is ranked first."""

        graph = TournamentGraph(2, [(1, 2)])
        data = OutcomeData(graph, [50], [50])

        for allow_ties in (False, True):
            with self.subTest(allow_ties=allow_ties):
                confidence = confidence_set(data, 0.1, allow_ties=allow_ties)

                self.assertEqual([ranking.r for ranking in confidence], [(1, 2)])

    def test_balanced(self) -> None:
        """Test that balanced outcomes retain every ranking."""

        graph = TournamentGraph(3, [(1, 2), (1, 3), (2, 3)])
        data = OutcomeData(graph, [20, 20, 20], [10, 10, 10])

        self.assertEqual(len(confidence_set(data, 0.1)), 6)
        self.assertEqual(len(confidence_set(data, 0.1, allow_ties=True)), 13)

    def test_projections(self) -> None:
        """Test the per-team projections of a confidence set."""

        graph = TournamentGraph(2, [(1, 2)])
        data = OutcomeData(graph, [50], [50])
        confidence = confidence_set(data, 0.1, method="asymptotic", replications=500)

        self.assertEqual(confidence.per_team[1], {1})
        self.assertEqual(confidence.per_team[2], {2})


if __name__ == "__main__":
    unittest.main()
