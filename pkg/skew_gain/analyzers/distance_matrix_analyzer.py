"""
Distance matrix builders: D^max, D^min and the common D of compatible graphs.
"""

import logging
from typing import Callable, Optional

import numpy as np

from .base_analyzer import BaseAnalyzer
from .graph_operations import require_connected
from .shortest_gain_analyzer import ShortestGainAnalyzer
from .spectral import is_hermitian
from ..exceptions import NotDistanceCompatibleError, ValidationError
from ..models.distance_matrix import DistanceMatrix, DistanceMatrixKind
from ..models.gain_graph import GainGraph
from ..models.gain_set import GainSet
from ..settings.analysis_settings import AnalysisSettings

GainPicker = Callable[[GainSet], complex]


class DistanceMatrixAnalyzer(BaseAnalyzer[DistanceMatrix]):
    """
    Analyzer materializing complex distance matrices.

    Entry (u, v) is a shortest-path gain from u to v times the hop distance.
    Rows are computed per source, concurrently when the settings allow it.
    """

    def __init__(self,
                 settings: Optional[AnalysisSettings] = None,
                 shortest_gains: Optional[ShortestGainAnalyzer] = None):
        """
        Initialize the analyzer.

        Args:
            settings: Shared analysis settings
            shortest_gains: Gain-set analyzer to reuse; built from settings when None
        """
        super().__init__(settings)
        self.logger = logging.getLogger(__name__)
        self.shortest_gains = shortest_gains or ShortestGainAnalyzer(self.settings)

    def analyze(self, graph: GainGraph) -> DistanceMatrix:
        return self.distance_matrix(graph)

    def _assemble(self, g: GainGraph, pick: GainPicker) -> np.ndarray:
        require_connected(g)
        cap = self.settings.gain_set_cap

        def row(src: int) -> np.ndarray:
            table = self.shortest_gains.shortest_gain_table(g, src, cap)
            entries = np.zeros(g.n, dtype=np.complex128)
            for v in range(g.n):
                if v != src:
                    entries[v] = pick(table.gain_sets[v]) * table.distances[v]
            return entries

        with self.settings.worker_pool_context() as map_sources:
            rows = map_sources(row, range(g.n))
        return np.vstack(rows)

    def _extremal_matrix(self, g: GainGraph, kind: DistanceMatrixKind) -> DistanceMatrix:
        index = 0 if kind == DistanceMatrixKind.MAX else 1
        entries = self._assemble(g, lambda gains: self.shortest_gains.extrema_of(gains)[index])
        hermitian = is_hermitian(entries, self.tolerance)
        if not hermitian:
            self.logger.warning(f"D^{kind.value} of {g!r} is not Hermitian; spectral operations will reject it")
        return DistanceMatrix(n=g.n, entries=entries, kind=kind, hermitian=hermitian)

    # ============================================================================
    # EXTREMAL MATRICES
    # ============================================================================

    def distance_matrix_max(self, g: GainGraph) -> DistanceMatrix:
        """
        D^max: lexicographic-max shortest-path gain times distance, per ordered pair.

        The result is not symmetrized and may be non-Hermitian for incompatible graphs.

        Raises:
            DisconnectedError, CapExceededError
        """
        return self._extremal_matrix(g, DistanceMatrixKind.MAX)

    def distance_matrix_min(self, g: GainGraph) -> DistanceMatrix:
        """
        D^min: lexicographic-min shortest-path gain times distance, per ordered pair.

        Raises:
            DisconnectedError, CapExceededError
        """
        return self._extremal_matrix(g, DistanceMatrixKind.MIN)

    # ============================================================================
    # COMMON MATRIX
    # ============================================================================

    def distance_matrix(self, g: GainGraph) -> DistanceMatrix:
        """
        The common distance matrix D of a distance-compatible graph.

        Compatibility is checked first so an incompatible graph fails with a
        witness instead of silently returning one of the extremal matrices.

        Raises:
            NotDistanceCompatibleError: With the first failing pair
            DisconnectedError, CapExceededError
        """
        report = self.shortest_gains.compatibility_report(g)
        failure = report.first_failure()
        if failure is not None:
            prop, witness = failure
            raise NotDistanceCompatibleError(witness.pair, witness.gains, prop.value)

        entries = self._assemble(g, lambda gains: self.shortest_gains.extrema_of(gains)[0])
        return DistanceMatrix(n=g.n, entries=entries, kind=DistanceMatrixKind.COMPATIBLE,
                              hermitian=is_hermitian(entries, self.tolerance))

    def distance_matrix_auto(self, g: GainGraph) -> DistanceMatrix:
        """The common D when the graph is compatible; raises NotDistanceCompatibleError otherwise."""
        matrix = self.distance_matrix(g)
        self.logger.info(f"Built common distance matrix of {g!r}")
        return matrix

    def distance_matrix_by_kind(self, g: GainGraph, which: str) -> DistanceMatrix:
        """
        Dispatch on "max", "min" or "auto".

        Raises:
            ValidationError: For any other selector
        """
        builders = {
            'max': self.distance_matrix_max,
            'min': self.distance_matrix_min,
            'auto': self.distance_matrix_auto,
        }
        if which not in builders:
            raise ValidationError("which", which, "Expected one of max, min, auto")
        return builders[which](g)
