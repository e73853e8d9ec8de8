#!/usr/bin/env python3
"""
Ranking Tests Performance Benchmark

This benchmark builds a tournament of growing size and measures the time and
memory used by the finite sample and asymptotic p-values of the
partial_ranking library.
"""

import time

import numpy as np
import psutil
from memory_profiler import profile

import partial_ranking
from partial_ranking import (
    OutcomeData,
    ProbabilityAssignment,
    Ranking,
    RankingTester,
    TournamentGraph,
)


def generate_tournament(games_per_edge: int) -> OutcomeData:
    """
    Generate the outcome data of a four teams round robin tournament.

    Parameters
    ----------
    games_per_edge
        Games played by every pair of teams.

    Returns
    -------
    :class:`partial_ranking.OutcomeData`
        Outcome data drawn from a data generating process favouring the
        lower-indexed teams.
    """

    graph = TournamentGraph(4, [(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)])
    p = ProbabilityAssignment(graph, [0.6, 0.65, 0.7, 0.55, 0.6, 0.55])

    print(
        f"Generating a tournament with {graph.n_edges} edges and "
        f"{games_per_edge:,} games per edge..."
    )

    return partial_ranking.simulate_tournament(p, graph, games_per_edge, seed=0)


def benchmark_memory_usage(games_per_edge: int) -> None:
    """Benchmark the p-values with memory profiling."""

    @profile
    def finite_sample(data: OutcomeData) -> float:
        """Test the reversed ranking with the finite sample p-value."""
        tester = RankingTester(data.graph, data.n, "finite_sample")
        return tester.test(data, Ranking((4, 3, 2, 1)), 0.05).p_value

    @profile
    def asymptotic(data: OutcomeData) -> float:
        """Test the reversed ranking with the asymptotic p-value."""
        tester = RankingTester(data.graph, data.n, "asymptotic")
        return tester.test(data, Ranking((4, 3, 2, 1)), 0.05).p_value

    data = generate_tournament(games_per_edge)

    print("\n" + "=" * 60)
    print("MEMORY PROFILING BENCHMARK")
    print("=" * 60)

    print("\nFinite sample p-value (memory profile):")
    print(f"p-value: {finite_sample(data):.6g}")

    print("\nAsymptotic p-value (memory profile):")
    print(f"p-value: {asymptotic(data):.6g}")


def benchmark_performance(games_per_edge: int) -> dict[str, float | int]:
    """Benchmark the p-values with timing."""

    data = generate_tournament(games_per_edge)
    outcomes = int(np.prod(data.n + 1))

    print("\n" + "=" * 60)
    print("PERFORMANCE BENCHMARK")
    print("=" * 60)

    process = psutil.Process()
    print(
        f"System: {psutil.cpu_count()} CPU cores, "
        f"{psutil.virtual_memory().total / 1024**3:.1f} GB RAM"
    )
    print(f"Outcome tuples: {outcomes:,}")

    timings = {}
    for method in partial_ranking.METHODS:
        print(f"\n{method.replace('_', ' ').capitalize()} p-value...")
        start_memory = process.memory_info().rss / 1024 / 1024
        start_time = time.perf_counter()

        outcome = RankingTester(data.graph, data.n, method).test(
            data, Ranking((4, 3, 2, 1)), 0.05
        )

        timings[method] = time.perf_counter() - start_time
        memory_used = process.memory_info().rss / 1024 / 1024 - start_memory

        print(f"   Time: {timings[method]:.2f} seconds")
        print(f"   Memory used: {memory_used:.1f} MB")
        print(f"   Statistic: {outcome.statistic:.4f}")
        print(f"   P-value: {outcome.p_value:.6g}")

    print("\nComparison:")
    print(
        f"   Finite sample / asymptotic time ratio: "
        f"{timings['finite_sample'] / timings['asymptotic']:.2f}x"
    )

    return {
        "outcomes": outcomes,
        "time_finite_sample": timings["finite_sample"],
        "time_asymptotic": timings["asymptotic"],
    }


if __name__ == "__main__":
    print("Ranking Tests Performance Benchmark")
    print("=" * 50)

    games_per_edge = 6
    results = benchmark_performance(games_per_edge)

    try:
        benchmark_memory_usage(games_per_edge)
    except ImportError:
        print("\nSkipping memory profiling (memory_profiler not available)")
        print("Install with: pip install memory-profiler")
