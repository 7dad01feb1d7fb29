"""
Analyzers package initialization.
"""

from .base_analyzer import BaseAnalyzer
from .shortest_gain_analyzer import ShortestGainAnalyzer, ShortestGainTable, lexicographic_compare
from .distance_matrix_analyzer import DistanceMatrixAnalyzer
from .balance_analyzer import BalanceAnalyzer
from .spectral import char_poly, cospectral, hermitian_eigenvalues, is_hermitian
from .graph_operations import (
    adjacency_matrix,
    apply_switching,
    blocks,
    build_graph,
    conjugate_switching,
    connected_components,
    gain,
    induced_subgraph,
    is_bipartite,
    is_connected,
    magnitude_graph,
    switching_matrix,
)
from .cycle_formulas import (
    agp_denominator,
    agp_sum,
    agp_sum_closed,
    agp_sum_direct,
    canonical_odd_cycle,
    cycle_distance_spectrum_closed,
    cycle_distance_spectrum_numeric,
    fallback_indices,
    singular_indices,
    switched_odd_cycle,
    unit_cycle_spectrum_closed,
)

__all__ = [
    "BaseAnalyzer",
    "ShortestGainAnalyzer",
    "ShortestGainTable",
    "DistanceMatrixAnalyzer",
    "BalanceAnalyzer",

    "lexicographic_compare",
    "char_poly",
    "cospectral",
    "hermitian_eigenvalues",
    "is_hermitian",
    "adjacency_matrix",
    "apply_switching",
    "blocks",
    "build_graph",
    "conjugate_switching",
    "connected_components",
    "gain",
    "induced_subgraph",
    "is_bipartite",
    "is_connected",
    "magnitude_graph",
    "switching_matrix",
    "agp_denominator",
    "agp_sum",
    "agp_sum_closed",
    "agp_sum_direct",
    "canonical_odd_cycle",
    "cycle_distance_spectrum_closed",
    "cycle_distance_spectrum_numeric",
    "fallback_indices",
    "singular_indices",
    "switched_odd_cycle",
    "unit_cycle_spectrum_closed",
]
