"""
Tests for shortest-path gain sets, lexicographic extrema and compatibility reports.
"""

import pytest
from pytest import mark, raises

from conftest import unbalanced_compatible_graph, weighted_square_graph, balanced_compatible_graph, pinned_settings
from skew_gain.analyzers.graph_operations import build_graph
from skew_gain.analyzers.shortest_gain_analyzer import ShortestGainAnalyzer, lexicographic_compare
from skew_gain.exceptions import CapExceededError, DisconnectedError, ValidationError
from skew_gain.models.compatibility_report import CompatibilityProperty
from skew_gain.models.gain_graph import GainGraph
from skew_gain.models.gain_set import GainSet
from skew_gain.settings.analysis_settings import AnalysisSettings


def complete_bipartite_unit(a: int, b: int, phase: complex) -> GainGraph:
    """K_{a,b} with gain `phase` on edges leaving vertex 0, 1 elsewhere."""
    edges = []
    for u in range(a):
        for v in range(a, a + b):
            edges.append((u, v, phase if u == 0 else 1))
    return build_graph(a + b, edges)


# ============================================================================
# Distances and gain sets
# ============================================================================

def test_bfs_distances(shortest_gains):
    assert shortest_gains.bfs_distances(weighted_square_graph(), 0) == [0, 1, 2, 1]


def test_weighted_square_opposite_pair_gain_set(shortest_gains):
    gains = shortest_gains.shortest_path_gain_set(weighted_square_graph(), 0, 2)
    assert sorted(abs(z) for z in gains) == pytest.approx([2.0, 12.0])
    assert all(abs(z.imag) < 1e-12 for z in gains)


def test_reverse_gain_set_is_conjugate(shortest_gains):
    g = balanced_compatible_graph()
    forward = shortest_gains.shortest_path_gain_set(g, 1, 3)
    backward = shortest_gains.shortest_path_gain_set(g, 3, 1)
    assert len(forward) == len(backward) == 1
    assert backward.values[0] == pytest.approx(forward.values[0].conjugate())


def test_unique_path_gives_singleton(shortest_gains):
    path = build_graph(3, [(0, 1, 2j), (1, 2, 3)])
    gains = shortest_gains.shortest_path_gain_set(path, 0, 2)
    assert gains.is_singleton()
    assert gains.values[0] == pytest.approx(6j)


def test_gain_set_of_vertex_with_itself(shortest_gains):
    with raises(ValidationError):
        shortest_gains.shortest_path_gain_set(balanced_compatible_graph(), 1, 1)


def test_table_from_source(shortest_gains):
    table = shortest_gains.shortest_gain_table(balanced_compatible_graph(), 0)
    assert table.distances == (0, 1, 1, 1)
    assert table.gain_sets[0].values == (1 + 0j,)


def test_equal_gains_are_merged(shortest_gains):
    square = build_graph(4, [(0, 1, 1j), (1, 2, 1j), (0, 3, -1), (3, 2, 1)])
    gains = shortest_gains.shortest_path_gain_set(square, 0, 2)
    assert len(gains) == 1
    assert gains.values[0] == pytest.approx(-1)


def test_cap_exceeded():
    # Three distinct gains reach vertex 4
    g = build_graph(5, [(0, 1, 1), (0, 2, 2), (0, 3, 3), (1, 4, 1), (2, 4, 1), (3, 4, 1)])
    analyzer = ShortestGainAnalyzer(AnalysisSettings(gain_set_cap=2, tolerance=1e-9, max_workers=1))
    with raises(CapExceededError) as info:
        analyzer.shortest_path_gain_set(g, 0, 4)
    assert info.value.vertex == 4
    assert info.value.cap == 2


def test_explicit_cap_overrides_settings(shortest_gains):
    g = build_graph(5, [(0, 1, 1), (0, 2, 2), (0, 3, 3), (1, 4, 1), (2, 4, 1), (3, 4, 1)])
    assert len(shortest_gains.shortest_path_gain_set(g, 0, 4)) == 3
    with raises(CapExceededError):
        shortest_gains.shortest_path_gain_set(g, 0, 4, cap=2)
    with raises(ValidationError) as info:
        shortest_gains.shortest_path_gain_set(g, 0, 4, cap=0)
    assert info.value.field == "cap"


def test_disconnected(shortest_gains):
    g = build_graph(3, [(0, 1, 1)])
    with raises(DisconnectedError):
        shortest_gains.shortest_path_gain_set(g, 0, 1)
    with raises(DisconnectedError):
        shortest_gains.compatibility_report(g)


# ============================================================================
# Lexicographic order
# ============================================================================

@mark.parametrize("a b expected".split(), [
    (1 + 5j, 2 + 0j, -1),
    (2 + 0j, 2 + 1j, -1),
    (2 + 1j, 2 + 1j, 0),
    (3 - 1j, 3 - 2j, 1),
    (1 + 1e-12 + 1j, 1 + 0j, 1),
])
def test_lexicographic_compare(a, b, expected):
    assert lexicographic_compare(a, b, 1e-9) == expected


def test_weighted_square_extrema(shortest_gains):
    gmax, gmin = shortest_gains.gain_extrema(weighted_square_graph(), 0, 2)
    assert gmax == pytest.approx(12)
    assert gmin == pytest.approx(2)


def test_extrema_tie_on_real_part(shortest_gains):
    gains = GainSet((1 + 1j, 1 - 1j), 1e-9)
    assert shortest_gains.extrema_of(gains) == (1 + 1j, 1 - 1j)


# ============================================================================
# Compatibility
# ============================================================================

def test_unbalanced_compatible_is_compatible(shortest_gains):
    report = shortest_gains.compatibility_report(unbalanced_compatible_graph())
    assert report.graph_distance_compatible
    assert report.witnesses == {}
    assert report.first_failure() is None


def test_weighted_square_fails_modulus_only(shortest_gains):
    report = shortest_gains.compatibility_report(weighted_square_graph())
    assert report.graph_argument_wise
    assert not report.graph_modulus_wise
    assert not report.graph_distance_compatible

    witness = report.witness(CompatibilityProperty.MODULUS_WISE)
    assert witness.pair == (0, 2)
    assert sorted(abs(z) for z in witness.gains) == pytest.approx([2.0, 12.0])
    assert tuple(report.per_pair[(2, 0)]) == (True, False)
    assert report.per_pair[(0, 1)].distance_compatible


def test_balanced_compatible_report_json(shortest_gains):
    data = shortest_gains.compatibility_report(balanced_compatible_graph()).to_dict()
    assert data == {
        'argument_wise': True,
        'modulus_wise': True,
        'distance_compatible': True,
        'witnesses': {},
    }


def test_argument_failure_on_square(shortest_gains):
    square = build_graph(4, [(0, 1, 1j), (1, 2, 1), (2, 3, 1), (3, 0, 1)])
    report = shortest_gains.compatibility_report(square)
    assert not report.graph_argument_wise
    assert report.graph_modulus_wise
    prop, witness = report.first_failure()
    assert prop == CompatibilityProperty.ARGUMENT_WISE
    assert witness.pair == (0, 2)


def test_pair_compatibility_unpacks(shortest_gains):
    argument_wise, modulus_wise = shortest_gains.pair_compatibility(weighted_square_graph(), 0, 2)
    assert argument_wise and not modulus_wise


def test_report_with_worker_pool_matches_sequential(shortest_gains):
    g = complete_bipartite_unit(3, 3, 1j)
    pooled = ShortestGainAnalyzer(pinned_settings(max_workers=3)).compatibility_report(g)
    sequential = shortest_gains.compatibility_report(g)
    assert pooled.per_pair == sequential.per_pair
    assert pooled.witnesses == sequential.witnesses


def test_block_compatibility(shortest_gains):
    # Compatible triangle glued at vertex 2 to an incompatible square
    g = build_graph(6, [
        (0, 1, 1), (1, 2, 1), (2, 0, 1),
        (2, 3, 1), (3, 4, 1), (4, 5, 1), (5, 2, 2),
    ])
    results = dict(shortest_gains.block_compatibility(g))
    assert results[frozenset({0, 1, 2})].graph_distance_compatible
    assert not results[frozenset({2, 3, 4, 5})].graph_modulus_wise
    assert not shortest_gains.compatibility_report(g).graph_modulus_wise
