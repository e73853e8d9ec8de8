"""
Identification Tests
====================

This module defines tests for the constraint systems, the identified sets and
the linear parametric and semiparametric models of the
:mod:`partial_ranking.ident` module.
"""

import unittest

import numpy as np
from numpy.testing import assert_allclose

from partial_ranking import (
    LINK_BTL,
    LINK_PROBIT,
    DataError,
    EnumerationBudgetError,
    IdentifiedSet,
    InconsistentSystemError,
    ProbabilityAssignment,
    Ranking,
    TournamentGraph,
    build_constraint_system,
    check_membership,
    check_membership_matrix,
    check_membership_semiparametric,
    enumerate_rankings,
    identified_set,
    probabilities_from_merits,
    project_rank,
    ranks_from_merits,
    semiparametric_witness,
    solve_linear_parametric,
)

CHAIN = TournamentGraph(4, [(1, 2), (2, 3), (3, 4)], ("A", "B", "C", "D"))
CHAIN_P = ProbabilityAssignment(CHAIN, [0.75, 0.7, 0.2])
TRIANGLE = TournamentGraph(3, [(1, 2), (1, 3), (2, 3)])


class TestBuildConstraintSystem(unittest.TestCase):
    """
    Define :func:`partial_ranking.build_constraint_system` definition unit
    tests methods.
    """

    def test_two_edges(self) -> None:
        """Test the system of a ranking on a two edges graph."""

        graph = TournamentGraph(3, [(1, 2), (3, 2)])
        system = build_constraint_system(graph, Ranking((2, 1, 3)))

        self.assertEqual(system.boundary, ((1, 2), (3, 2)))
        self.assertEqual(system.order, (((3, 2), (1, 2)),))

        # p_CB <= p_AB <= 1 / 2 in canonical coordinates (p_AB, p_BC).
        self.assertTrue(system.is_satisfied([0.4, 0.7]))
        self.assertFalse(system.is_satisfied([0.6, 0.7]))
        self.assertFalse(system.is_satisfied([0.4, 0.5]))

    def test_chain(self) -> None:
        """Test the system of a ranking on the chain graph."""

        system = build_constraint_system(CHAIN, Ranking((1, 3, 4, 2)))

        self.assertEqual(system.boundary, ((2, 1), (3, 2), (3, 4)))
        self.assertEqual(system.order, (((3, 4), (3, 2)),))
        self.assertTrue(system.is_satisfied(CHAIN_P.p))

    def test_tie(self) -> None:
        """Test that a tie forces one half."""

        system = build_constraint_system(
            TournamentGraph(2, [(1, 2)]), Ranking((1, 1))
        )

        self.assertEqual(set(system.boundary), {(1, 2), (2, 1)})
        self.assertEqual(system.tied_edges, (0,))
        self.assertTrue(system.is_satisfied([0.5]))
        self.assertFalse(system.is_satisfied([0.6]))
        self.assertFalse(system.is_satisfied([0.4]))

    def test_feasible_point(self) -> None:
        """Test that the feasible point satisfies the system."""

        for ranking in enumerate_rankings(4, allow_ties=True):
            with self.subTest(ranking=str(ranking)):
                system = build_constraint_system(CHAIN, ranking)
                self.assertTrue(system.is_satisfied(system.feasible_point(), 1e-12))

    def test_pruning(self) -> None:
        """Test that pruning the order pairs preserves the polytope."""

        rng = np.random.default_rng(7)
        points = rng.uniform(0, 1, (500, TRIANGLE.n_edges))
        for ranking in enumerate_rankings(3, allow_ties=True):
            with self.subTest(ranking=str(ranking)):
                pruned = build_constraint_system(TRIANGLE, ranking)
                full = build_constraint_system(TRIANGLE, ranking, prune=False)

                self.assertLessEqual(len(pruned.order), len(full.order))
                for point in points:
                    self.assertEqual(
                        pruned.is_satisfied(point), full.is_satisfied(point)
                    )

    def test_mismatch(self) -> None:
        """Test that a ranking of another team count is rejected."""

        with self.assertRaises(DataError):
            build_constraint_system(CHAIN, Ranking((1, 2)))


class TestCheckMembership(unittest.TestCase):
    """
    Define :func:`partial_ranking.check_membership` and
    :func:`partial_ranking.check_membership_matrix` definitions unit tests
    methods.
    """

    def test_check_membership(self) -> None:
        """Test :func:`partial_ranking.check_membership` definition."""

        self.assertTrue(check_membership(CHAIN_P, CHAIN, Ranking((1, 3, 4, 2))))
        self.assertTrue(check_membership(CHAIN_P, CHAIN, Ranking((2, 3, 4, 1))))
        self.assertFalse(check_membership(CHAIN_P, CHAIN, Ranking((4, 3, 2, 1))))

        graph = TournamentGraph(2, [(1, 2)])
        p = ProbabilityAssignment(graph, [0.75])
        self.assertTrue(check_membership(p, graph, Ranking((1, 2))))
        self.assertFalse(check_membership(p, graph, Ranking((2, 1))))
        self.assertFalse(check_membership(p, graph, Ranking((1, 1))))

    def test_tolerance(self) -> None:
        """Test that the tolerance lets near one half probabilities tie."""

        graph = TournamentGraph(2, [(1, 2)])
        p = ProbabilityAssignment(graph, [0.5 + 1e-12])

        self.assertFalse(check_membership(p, graph, Ranking((1, 1))))
        self.assertTrue(check_membership(p, graph, Ranking((1, 1)), tol=1e-9))

    def test_check_membership_matrix(self) -> None:
        """Test :func:`partial_ranking.check_membership_matrix` definition."""

        self.assertTrue(
            check_membership_matrix(CHAIN_P, CHAIN, Ranking((1, 3, 4, 2)))
        )
        self.assertTrue(
            check_membership_matrix(CHAIN_P, CHAIN, Ranking((2, 3, 4, 1)))
        )
        self.assertFalse(
            check_membership_matrix(CHAIN_P, CHAIN, Ranking((4, 3, 2, 1)))
        )

        graph = TournamentGraph(2, [(1, 2)])
        p = ProbabilityAssignment(graph, [0.5])
        self.assertFalse(check_membership_matrix(p, graph, Ranking((1, 2))))
        self.assertTrue(
            check_membership_matrix(p, graph, Ranking((1, 1)), merge_ties=True)
        )

    def test_representations_agree(self) -> None:
        """Test that both membership checks agree on every permutation."""

        for ranking in enumerate_rankings(4):
            with self.subTest(ranking=str(ranking)):
                self.assertEqual(
                    check_membership(CHAIN_P, CHAIN, ranking),
                    check_membership_matrix(CHAIN_P, CHAIN, ranking),
                )

    def test_matrix_ties(self) -> None:
        """Test that ties require merging the tied teams."""

        with self.assertRaises(DataError):
            check_membership_matrix(CHAIN_P, CHAIN, Ranking((1, 1, 3, 4)))

    def test_relabeling_invariance(self) -> None:
        """Test that membership is invariant to relabeling the teams."""

        permutation = (3, 1, 4, 2)
        graph = CHAIN.relabel(permutation)
        p = CHAIN_P.relabel(permutation)
        for ranking in enumerate_rankings(4):
            with self.subTest(ranking=str(ranking)):
                self.assertEqual(
                    check_membership(CHAIN_P, CHAIN, ranking),
                    check_membership(p, graph, ranking.relabel(permutation)),
                )


class TestIdentifiedSet(unittest.TestCase):
    """
    Define :func:`partial_ranking.identified_set` definition and
    :class:`partial_ranking.IdentifiedSet` class unit tests methods.
    """

    def test_chain(self) -> None:
        """Test the identified set of the four teams chain."""

        identified = identified_set(CHAIN_P, CHAIN)

        self.assertEqual(
            [ranking.r for ranking in identified], [(1, 3, 4, 2), (2, 3, 4, 1)]
        )
        self.assertIn(Ranking((1, 3, 4, 2)), identified)
        self.assertEqual(len(identified), 2)

    def test_point_identification(self) -> None:
        """Test that a complete graph identifies the ranking."""

        p = probabilities_from_merits([1, 2, 3], TRIANGLE)
        identified = identified_set(p, TRIANGLE)

        self.assertEqual([ranking.r for ranking in identified], [(1, 2, 3)])

    def test_intransitive(self) -> None:
        """Test that intransitive probabilities identify no ranking."""

        p = ProbabilityAssignment.from_mapping(
            TRIANGLE, {(1, 2): 0.7, (2, 3): 0.7, (3, 1): 0.7}
        )

        self.assertEqual(len(identified_set(p, TRIANGLE)), 0)
        self.assertEqual(len(identified_set(p, TRIANGLE, allow_ties=True)), 0)

    def test_ties(self) -> None:
        """Test that equal probabilities identify the tied ranking."""

        p = ProbabilityAssignment(TRIANGLE, [0.5, 0.5, 0.5])
        identified = identified_set(p, TRIANGLE, allow_ties=True)

        self.assertEqual([ranking.r for ranking in identified], [(1, 1, 1)])

    def test_invalid_model(self) -> None:
        """Test that an unknown model is rejected."""

        with self.assertRaises(DataError):
            identified_set(CHAIN_P, CHAIN, model="parametric")  # pyright: ignore

    def test_budget(self) -> None:
        """Test that the enumeration cap is enforced."""

        with self.assertRaises(EnumerationBudgetError):
            identified_set(CHAIN_P, CHAIN, max_teams=3)


class TestProjectRank(unittest.TestCase):
    """
    Define :func:`partial_ranking.project_rank` definition unit tests methods.
    """

    def test_project_rank(self) -> None:
        """Test :func:`partial_ranking.project_rank` definition."""

        identified = identified_set(CHAIN_P, CHAIN)

        self.assertEqual(project_rank(identified, 1), {1, 2})
        self.assertEqual(project_rank(identified, 2), {3})
        self.assertEqual(project_rank(identified, 3), {4})
        self.assertEqual(project_rank(identified, 4), {1, 2})
        self.assertEqual(identified.bounds(1), (1, 2))

    def test_singleton(self) -> None:
        """Test that a singleton set projects to singletons."""

        identified = IdentifiedSet(3, (Ranking((2, 1, 3)),))

        for team in range(1, 4):
            with self.subTest(team=team):
                self.assertEqual(len(project_rank(identified, team)), 1)

    def test_empty(self) -> None:
        """Test that an empty set has empty projections and no bounds."""

        identified = IdentifiedSet(3)

        self.assertEqual(project_rank(identified, 1), frozenset())
        self.assertIsNone(identified.bounds(1))

    def test_invalid_team(self) -> None:
        """Test that unknown teams are rejected."""

        identified = IdentifiedSet(3)
        for team in (0, 4):
            with self.subTest(team=team), self.assertRaises(DataError):
                project_rank(identified, team)


class TestSolveLinearParametric(unittest.TestCase):
    """
    Define :func:`partial_ranking.solve_linear_parametric` definition unit
    tests methods.
    """

    def test_chain(self) -> None:
        """Test the merits of the four teams chain."""

        theta = solve_linear_parametric(CHAIN_P, CHAIN, norm_value=1)

        assert_allclose(theta.theta, [1, 2.099, 2.946, 1.559], atol=1e-3)
        self.assertEqual(ranks_from_merits(theta).r, (1, 3, 4, 2))

    def test_equal_probabilities(self) -> None:
        """Test that one half probabilities yield equal merits."""

        p = ProbabilityAssignment(CHAIN, [0.5, 0.5, 0.5])
        theta = solve_linear_parametric(p, CHAIN, norm_team=3, norm_value=2)

        assert_allclose(theta.theta, [2, 2, 2, 2])

    def test_recovery(self) -> None:
        """Test that forward-generated merits are recovered."""

        for link in (LINK_BTL, LINK_PROBIT):
            with self.subTest(link=link.name):
                p = probabilities_from_merits([0, 1, 2.5], TRIANGLE, link)
                theta = solve_linear_parametric(p, TRIANGLE, link)

                assert_allclose(theta.theta, [0, 1, 2.5], atol=1e-9)

    def test_inconsistent(self) -> None:
        """Test that intransitive probabilities are inconsistent."""

        p = ProbabilityAssignment.from_mapping(
            TRIANGLE, {(1, 2): 0.7, (2, 3): 0.7, (3, 1): 0.7}
        )

        with self.assertRaises(InconsistentSystemError) as context:
            solve_linear_parametric(p, TRIANGLE)

        self.assertEqual(context.exception.edge, (2, 3))
        self.assertGreater(abs(context.exception.residual), 1)

    def test_disconnected(self) -> None:
        """Test that a disconnected graph is rejected."""

        graph = TournamentGraph(4, [(1, 2), (3, 4)])

        with self.assertRaises(DataError):
            solve_linear_parametric(ProbabilityAssignment(graph, [0.6, 0.6]), graph)


class TestSemiparametric(unittest.TestCase):
    """
    Define :func:`partial_ranking.check_membership_semiparametric` and
    :func:`partial_ranking.semiparametric_witness` definitions unit tests
    methods.
    """

    def test_non_identification(self) -> None:
        """Test that a nonlinear link hides the ranking of the chain ends."""

        p = ProbabilityAssignment(CHAIN, [0.52, 0.505, 0.45795])

        for r in ((1, 3, 4, 2), (2, 3, 4, 1)):
            with self.subTest(ranking=r):
                ranking = Ranking(r)
                nu = semiparametric_witness(p, CHAIN, ranking)

                self.assertIsNotNone(nu)
                assert nu is not None
                self.assertEqual(ranks_from_merits(nu), ranking)

    def test_single_edge(self) -> None:
        """Test the membership on a single edge."""

        graph = TournamentGraph(2, [(1, 2)])
        p = ProbabilityAssignment(graph, [0.6])

        self.assertTrue(check_membership_semiparametric(p, graph, Ranking((1, 2))))
        self.assertFalse(check_membership_semiparametric(p, graph, Ranking((2, 1))))

    def test_chain(self) -> None:
        """Test the semiparametric identified set of the four teams chain."""

        identified = identified_set(CHAIN_P, CHAIN, model="semiparametric")

        self.assertEqual(
            [ranking.r for ranking in identified], [(1, 3, 4, 2), (2, 3, 4, 1)]
        )

    def test_inclusion(self) -> None:
        """Test that semiparametric members are nonparametric members."""

        rng = np.random.default_rng(4)
        for graph in (CHAIN, TRIANGLE):
            for _ in range(10):
                p = ProbabilityAssignment(
                    graph, rng.uniform(0.05, 0.95, graph.n_edges)
                )
                for ranking in enumerate_rankings(graph.q):
                    if check_membership_semiparametric(p, graph, ranking):
                        self.assertTrue(check_membership(p, graph, ranking))

    def test_margin(self) -> None:
        """Test that the strictness margin must be positive."""

        with self.assertRaises(DataError):
            semiparametric_witness(CHAIN_P, CHAIN, Ranking((1, 3, 4, 2)), 0)


if __name__ == "__main__":
    unittest.main()
