"""
Shared fixtures: the worked example graphs, analyzers with pinned settings and
seeded random instance builders.
"""

import cmath
import math
from pathlib import Path
from typing import List, Tuple

import numpy as np
import pytest

from csg_cli.entities.random_model import RandomModel
from csg_cli.utils.generators import random_csg
from skew_gain.analyzers.balance_analyzer import BalanceAnalyzer
from skew_gain.analyzers.distance_matrix_analyzer import DistanceMatrixAnalyzer
from skew_gain.analyzers.graph_operations import apply_switching, build_graph
from skew_gain.analyzers.shortest_gain_analyzer import ShortestGainAnalyzer
from skew_gain.models.gain_graph import GainGraph, SwitchingFunction
from skew_gain.settings.analysis_settings import AnalysisSettings

SAMPLE_DIR = Path(__file__).parent / 'sample_graphs'

SQUARE_THETA = 0.5

# Displayed distance matrix of the balanced worked example
BALANCED_COMPATIBLE_DISTANCE = np.array([
    [0, 1 + 1j, -1 + 1j, 1j],
    [1 - 1j, 0, 1j, 2 * (1 + 1j)],
    [-(1 + 1j), -1j, 0, 1 - 1j],
    [-1j, 2 * (1 - 1j), 1 + 1j, 0],
])

BALANCED_COMPATIBLE_CHAR_POLY = [1.0, 0.0, -16.0, -24.0, -7.0]


def unbalanced_compatible_graph() -> GainGraph:
    """Unbalanced (triangle 0-1-2 has gain 1+i) yet distance compatible."""
    return build_graph(4, [(0, 1, 1), (1, 2, 1 + 1j), (2, 3, 1), (3, 0, 1 - 1j), (0, 2, 1)])


def weighted_square_graph(theta: float = SQUARE_THETA) -> GainGraph:
    """Balanced 4-cycle whose opposite vertices see gains 2 and 12."""
    e = cmath.exp(1j * theta)
    return build_graph(4, [(0, 1, e), (1, 2, 2 / e), (2, 3, 3 / e), (3, 0, 4 * e)])


def balanced_compatible_graph() -> GainGraph:
    """Balanced and distance compatible."""
    return build_graph(4, [(0, 1, 1 + 1j), (1, 2, 1j), (2, 3, 1 - 1j), (3, 0, -1j), (0, 2, -1 + 1j)])


def pinned_settings(max_workers: int = 1) -> AnalysisSettings:
    return AnalysisSettings(gain_set_cap=4096, tolerance=1e-9, max_workers=max_workers)


def random_instance(kind: str, n: int, extra: int, seed: int, **bounds) -> GainGraph:
    """Connected random graph with n vertices and n-1+extra edges (clamped to simple)."""
    m = min(n - 1 + extra, n * (n - 1) // 2)
    return random_csg(RandomModel(kind=kind, seed=seed, **bounds), n, m)


def random_bipartite_instance(seed: int, balanced: bool) -> GainGraph:
    """
    Connected bipartite graph on sides {0..a-1} and {a..a+b-1} with unit gains,
    either random arguments or a random switching of all-ones.
    """
    rng = np.random.default_rng(seed)
    a, b = int(rng.integers(1, 5)), int(rng.integers(1, 5))
    n = a + b
    side = [0] * a + [1] * b

    # First vertex of each side comes first so every later vertex has an opposite-side anchor
    rest = [int(v) for v in rng.permutation(n) if v not in (0, a)]
    order = [0, a] + rest
    edges = {(0, a)}
    for i, v in enumerate(order[2:], start=2):
        anchors = [u for u in order[:i] if side[u] != side[v]]
        u = anchors[int(rng.integers(0, len(anchors)))]
        edges.add((min(u, v), max(u, v)))

    cross = [(u, v) for u in range(a) for v in range(a, n) if (u, v) not in edges]
    if cross:
        extra = int(rng.integers(0, min(len(cross), 4) + 1))
        for i in rng.choice(len(cross), size=extra, replace=False):
            edges.add(cross[int(i)])

    ordered: List[Tuple[int, int]] = sorted(edges)
    if balanced:
        graph = build_graph(n, [(u, v, 1.0) for u, v in ordered])
        zeta = SwitchingFunction.from_angles(rng.uniform(0, 2 * math.pi, size=n).tolist())
        return apply_switching(graph, zeta)
    angles = rng.uniform(0, 2 * math.pi, size=len(ordered))
    return build_graph(n, [(u, v, cmath.exp(1j * t)) for (u, v), t in zip(ordered, angles)])


@pytest.fixture(scope="session")
def settings() -> AnalysisSettings:
    return pinned_settings()


@pytest.fixture(scope="session")
def shortest_gains(settings) -> ShortestGainAnalyzer:
    return ShortestGainAnalyzer(settings)


@pytest.fixture(scope="session")
def distance_matrices(settings, shortest_gains) -> DistanceMatrixAnalyzer:
    return DistanceMatrixAnalyzer(settings, shortest_gains)


@pytest.fixture(scope="session")
def balance(settings, distance_matrices) -> BalanceAnalyzer:
    return BalanceAnalyzer(settings, distance_matrices)


@pytest.fixture
def unbalanced_compatible() -> GainGraph:
    return unbalanced_compatible_graph()


@pytest.fixture
def weighted_square() -> GainGraph:
    return weighted_square_graph()


@pytest.fixture
def balanced_compatible() -> GainGraph:
    return balanced_compatible_graph()
