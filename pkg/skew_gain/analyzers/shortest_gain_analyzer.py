"""
Shortest-path gains, lexicographic extrema and distance compatibility.
"""

import logging
from collections import deque
from dataclasses import dataclass
from functools import cmp_to_key
from typing import Dict, FrozenSet, List, Optional, Tuple

from .base_analyzer import BaseAnalyzer
from .graph_operations import blocks, connected_components, induced_subgraph, require_connected
from ..exceptions import CapExceededError, DisconnectedError, ValidationError
from ..models.compatibility_report import (
    CompatibilityProperty,
    CompatibilityReport,
    CompatibilityWitness,
    Pair,
    PairCompatibility,
)
from ..models.gain_graph import GainGraph, validate_vertex
from ..models.gain_set import GainSet, merge_gain
from ..settings.analysis_settings import AnalysisSettings


@dataclass(frozen=True)
class ShortestGainTable:
    """
    Result of one layered-DAG pass from a source vertex.

    Attributes:
        source: Source vertex
        distances: Hop distance to every vertex
        gain_sets: Distinct shortest-path gains to every vertex (the source maps to {1})
    """
    source: int
    distances: Tuple[int, ...]
    gain_sets: Tuple[GainSet, ...]


# Flags of one target plus the two gains that break a failed property
PairOutcome = Tuple[int, PairCompatibility, Optional[Tuple[complex, complex]], Optional[Tuple[complex, complex]]]


def lexicographic_compare(a: complex, b: complex, tolerance: float) -> int:
    """
    Compare real parts first, then imaginary parts.

    Real parts within tolerance * max(1, |Re a|, |Re b|) count as equal.
    """
    scale = max(1.0, abs(a.real), abs(b.real))
    if abs(a.real - b.real) > tolerance * scale:
        return -1 if a.real < b.real else 1
    if a.imag == b.imag:
        return 0
    return -1 if a.imag < b.imag else 1


def is_positive_real(z: complex, tolerance: float) -> bool:
    """|Im z| <= tol * |z| and Re z > 0."""
    return abs(z.imag) <= tolerance * abs(z) and z.real > 0


class ShortestGainAnalyzer(BaseAnalyzer[CompatibilityReport]):
    """
    Analyzer for shortest-path gain sets and the compatibility classification.
    Organized by: DISTANCES, GAIN SETS, COMPATIBILITY operations.
    """

    def __init__(self, settings: Optional[AnalysisSettings] = None):
        super().__init__(settings)
        self.logger = logging.getLogger(__name__)

    def analyze(self, graph: GainGraph) -> CompatibilityReport:
        return self.compatibility_report(graph)

    # ============================================================================
    # DISTANCES
    # ============================================================================

    def bfs_distances(self, g: GainGraph, src: int) -> List[int]:
        """
        Hop distances from src to every vertex.

        Raises:
            DisconnectedError: If g is not connected
        """
        validate_vertex(src, g.n)
        require_connected(g)
        return list(self._bfs(g, src)[0])

    @staticmethod
    def _bfs(g: GainGraph, src: int) -> Tuple[List[int], List[int]]:
        """Distances (-1 when unreachable) and the BFS visiting order."""
        distances = [-1] * g.n
        distances[src] = 0
        order = [src]
        queue = deque([src])
        while queue:
            u = queue.popleft()
            for w in g.neighbors(u):
                if distances[w] == -1:
                    distances[w] = distances[u] + 1
                    order.append(w)
                    queue.append(w)
        return distances, order

    # ============================================================================
    # GAIN SETS
    # ============================================================================

    def shortest_gain_table(self, g: GainGraph, src: int, cap: Optional[int] = None) -> ShortestGainTable:
        """
        Distinct shortest-path gains from src to every vertex in one pass.

        Gain sets are merged vertex by vertex over the BFS-layered DAG, so the work
        depends on the number of distinct gains, not on the number of paths.

        Raises:
            ValidationError: If cap is below 1
            DisconnectedError: If g is not connected
            CapExceededError: If some vertex collects more than cap distinct gains
        """
        validate_vertex(src, g.n)
        if cap is None:
            cap = self.settings.gain_set_cap
        elif cap < 1:
            raise ValidationError("cap", cap, "Gain set cap must be at least 1")
        require_connected(g)
        return self._gain_table(g, src, cap)

    def _gain_table(self, g: GainGraph, src: int, cap: int) -> ShortestGainTable:
        tolerance = self.tolerance
        distances, order = self._bfs(g, src)
        if any(d < 0 for d in distances):
            raise DisconnectedError(g.n, len(connected_components(g)))

        values: List[List[complex]] = [[] for _ in range(g.n)]
        values[src] = [1 + 0j]
        for w in order[1:]:
            merged: List[complex] = []
            for p in g.neighbors(w):
                if distances[p] != distances[w] - 1:
                    continue
                step = g.gain(p, w)
                for z in values[p]:
                    merge_gain(merged, z * step, tolerance)
                if len(merged) > cap:
                    raise CapExceededError(w, cap)
            values[w] = merged

        gain_sets = tuple(GainSet(tuple(vals), tolerance) for vals in values)
        return ShortestGainTable(src, tuple(distances), gain_sets)

    def shortest_path_gain_set(self, g: GainGraph, u: int, v: int, cap: Optional[int] = None) -> GainSet:
        """
        Distinct gains of all shortest oriented paths from u to v.

        Raises:
            ValidationError: If u == v
            DisconnectedError, CapExceededError
        """
        validate_vertex(v, g.n)
        if u == v:
            raise ValidationError("v", v, "Gain sets are defined for distinct vertices")
        return self.shortest_gain_table(g, u, cap).gain_sets[v]

    def gain_extrema(self, g: GainGraph, u: int, v: int) -> Tuple[complex, complex]:
        """
        Lexicographic (max, min) of the shortest-path gains from u to v.
        """
        return self.extrema_of(self.shortest_path_gain_set(g, u, v))

    def extrema_of(self, gains: GainSet) -> Tuple[complex, complex]:
        key = cmp_to_key(lambda a, b: lexicographic_compare(a, b, self.tolerance))
        return max(gains.values, key=key), min(gains.values, key=key)

    # ============================================================================
    # COMPATIBILITY
    # ============================================================================

    def pair_compatibility(self, g: GainGraph, u: int, v: int) -> PairCompatibility:
        """
        Argument-wise and modulus-wise flags of the pair (u, v).
        """
        flags, _, _ = self._classify(self.shortest_path_gain_set(g, u, v))
        return flags

    def _classify(self, gains: GainSet) -> Tuple[PairCompatibility,
                                                  Optional[Tuple[complex, complex]],
                                                  Optional[Tuple[complex, complex]]]:
        """
        Flags plus a breaking gain pair for each failed property.

        Positive-real ratios and equal moduli are equivalence relations, so
        comparing every gain against the first one covers all pairs.
        """
        tolerance = self.tolerance
        reference = gains.values[0]
        argument_break = None
        modulus_break = None
        for z in gains.values[1:]:
            if argument_break is None and not is_positive_real(z / reference, tolerance):
                argument_break = (reference, z)
            if modulus_break is None and abs(abs(z) - abs(reference)) > tolerance * max(abs(z), abs(reference)):
                modulus_break = (reference, z)
        flags = PairCompatibility(argument_wise=argument_break is None, modulus_wise=modulus_break is None)
        return flags, argument_break, modulus_break

    def _source_outcomes(self, g: GainGraph, src: int) -> List[PairOutcome]:
        table = self._gain_table(g, src, self.settings.gain_set_cap)
        outcomes: List[PairOutcome] = []
        for v in range(src + 1, g.n):
            flags, argument_break, modulus_break = self._classify(table.gain_sets[v])
            outcomes.append((v, flags, argument_break, modulus_break))
        self.logger.debug(f"Classified {len(outcomes)} pairs from source {src}")
        return outcomes

    def compatibility_report(self, g: GainGraph) -> CompatibilityReport:
        """
        Classify every pair of distinct vertices.

        Each unordered pair is classified once and mirrored: the reverse gain set is
        the elementwise conjugate, which keeps both flags.

        Raises:
            DisconnectedError, CapExceededError
        """
        require_connected(g)

        with self.settings.worker_pool_context() as map_sources:
            per_source = map_sources(lambda s: self._source_outcomes(g, s), range(g.n))

        per_pair: Dict[Pair, PairCompatibility] = {}
        witnesses: Dict[CompatibilityProperty, CompatibilityWitness] = {}
        for u, outcomes in enumerate(per_source):
            for v, flags, argument_break, modulus_break in outcomes:
                per_pair[(u, v)] = flags
                per_pair[(v, u)] = flags
                if argument_break and CompatibilityProperty.ARGUMENT_WISE not in witnesses:
                    witnesses[CompatibilityProperty.ARGUMENT_WISE] = CompatibilityWitness((u, v), argument_break)
                if modulus_break and CompatibilityProperty.MODULUS_WISE not in witnesses:
                    witnesses[CompatibilityProperty.MODULUS_WISE] = CompatibilityWitness((u, v), modulus_break)

        report = CompatibilityReport.aggregate(per_pair, witnesses)
        self.logger.info(
            f"Compatibility of {g!r}: argument_wise={report.graph_argument_wise}, "
            f"modulus_wise={report.graph_modulus_wise}")
        return report

    def block_compatibility(self, g: GainGraph) -> List[Tuple[FrozenSet[int], CompatibilityReport]]:
        """
        Compatibility report of each block's induced subgraph.
        """
        results: List[Tuple[FrozenSet[int], CompatibilityReport]] = []
        for block in blocks(g):
            subgraph, _ = induced_subgraph(g, block)
            results.append((block, self.compatibility_report(subgraph)))
        return results
