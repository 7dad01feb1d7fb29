"""
Balance decision with certificates, elementary-subgraph characteristic
polynomials and the spectral characterizations of balance.
"""

import logging
from typing import Dict, FrozenSet, List, Optional, Sequence, Set, Tuple, Union

import networkx as nx

from .base_analyzer import BaseAnalyzer
from .distance_matrix_analyzer import DistanceMatrixAnalyzer
from .graph_operations import (
    adjacency_matrix,
    apply_switching,
    build_graph,
    magnitude_graph,
    require_connected,
)
from .shortest_gain_analyzer import ShortestGainAnalyzer, is_positive_real
from .spectral import cospectral
from ..constants import COSPECTRAL_TOLERANCE, ELEMENTARY_MAX_DIMENSION
from ..exceptions import (
    BadVertexError,
    DimensionTooLargeError,
    InvalidCycleError,
    NotDistanceCompatibleError,
)
from ..models.balance_certificate import BalanceCertificate, BalanceStatus
from ..models.gain_graph import GainGraph, OrientedCycle, SwitchingFunction, validate_vertex
from ..models.spectrum import CharPoly
from ..settings.analysis_settings import AnalysisSettings

CycleLike = Union[OrientedCycle, Sequence[int]]


class BalanceAnalyzer(BaseAnalyzer[BalanceCertificate]):
    """
    Analyzer deciding balance and checking the spectral characterizations.
    Organized by: CYCLES, CERTIFICATES, CHARACTERISTIC POLYNOMIAL, SPECTRAL CHARACTERIZATIONS.
    """

    def __init__(self,
                 settings: Optional[AnalysisSettings] = None,
                 distance_matrices: Optional[DistanceMatrixAnalyzer] = None):
        super().__init__(settings)
        self.logger = logging.getLogger(__name__)
        self.distance_matrices = distance_matrices or DistanceMatrixAnalyzer(self.settings)

    @property
    def shortest_gains(self) -> ShortestGainAnalyzer:
        return self.distance_matrices.shortest_gains

    def analyze(self, graph: GainGraph) -> BalanceCertificate:
        return self.balance_certificate(graph)

    # ============================================================================
    # CYCLES
    # ============================================================================

    def cycle_gain(self, g: GainGraph, c: CycleLike) -> complex:
        """
        Product of the gains along the oriented traversal of c.

        Raises:
            InvalidCycleError: If c is not a cycle of g
        """
        cycle = c if isinstance(c, OrientedCycle) else OrientedCycle(tuple(c))
        product = 1 + 0j
        for a, b in cycle.oriented_edges():
            try:
                adjacent = g.has_edge(validate_vertex(a, g.n), validate_vertex(b, g.n))
            except BadVertexError:
                raise InvalidCycleError(cycle.vertices, f"vertex out of range for n={g.n}")
            if not adjacent:
                raise InvalidCycleError(cycle.vertices, f"{a} and {b} are not adjacent")
            product *= g.gain(a, b)
        return product

    # ============================================================================
    # CERTIFICATES
    # ============================================================================

    def balance_certificate(self, g: GainGraph) -> BalanceCertificate:
        """
        Decide balance by the spanning-tree potential method.

        A BFS tree rooted at vertex 0 fixes zeta(0) = 1 and, along each tree edge
        u->v with gain r*e^{ia}, zeta(v) = zeta(u)*e^{-ia}, so every tree gain becomes
        positive real after switching. The graph is balanced iff every non-tree
        edge is then positive real as well; otherwise the fundamental cycle of the
        first failing edge is returned as witness.

        Raises:
            DisconnectedError: If g is not connected
        """
        require_connected(g)
        zeta: List[complex] = [0j] * g.n
        zeta[0] = 1 + 0j
        tree = nx.Graph()
        tree.add_nodes_from(range(g.n))

        # Neighbors come out sorted, so the tree matches a plain BFS over g.neighbors
        for u, w in nx.bfs_edges(g.to_networkx(), 0):
            z = g.gain(u, w)
            zeta[w] = zeta[u] * z.conjugate() / abs(z)
            tree.add_edge(u, w)

        for a, b, z in g.oriented_edges():
            if tree.has_edge(a, b):
                continue
            switched = zeta[a].conjugate() * z * zeta[b]
            if is_positive_real(switched, self.tolerance):
                continue

            # a -> b closed by the tree path from b back to a
            vertices = [a] + nx.shortest_path(tree, b, a)[:-1]
            start = vertices.index(min(vertices))
            cycle = OrientedCycle(tuple(vertices[start:] + vertices[:start]))
            witness_gain = self.cycle_gain(g, cycle)
            self.logger.info(f"{g!r} is unbalanced: cycle {list(cycle.vertices)} has gain {witness_gain}")
            return BalanceCertificate(BalanceStatus.UNBALANCED, witness_cycle=cycle, witness_gain=witness_gain)

        # Renormalize to absorb rounding drift along deep trees
        unit = SwitchingFunction(tuple(z / abs(z) for z in zeta))
        self.logger.info(f"{g!r} is balanced")
        return BalanceCertificate(BalanceStatus.BALANCED, zeta=unit)

    def verify_certificate(self, g: GainGraph, certificate: BalanceCertificate) -> bool:
        """
        Re-check a certificate against g.

        Balanced: switching by zeta makes every gain positive real.
        Unbalanced: the witness is a cycle of g with the stated gain, and that
        gain is not positive real.
        """
        tolerance = self.tolerance
        if certificate.is_balanced:
            if len(certificate.zeta) != g.n:
                return False
            switched = apply_switching(g, certificate.zeta)
            return all(is_positive_real(z, tolerance) for _, _, z in switched.oriented_edges())

        try:
            actual = self.cycle_gain(g, certificate.witness_cycle)
        except InvalidCycleError:
            return False
        matches = abs(actual - certificate.witness_gain) <= tolerance * max(1.0, abs(actual))
        return matches and not is_positive_real(actual, tolerance)

    # ============================================================================
    # CHARACTERISTIC POLYNOMIAL
    # ============================================================================

    def _cycles_by_minimum(self, g: GainGraph) -> Dict[int, List[Tuple[int, int, float]]]:
        """
        Every undirected cycle once, keyed by its smallest vertex.

        Values are (vertex bitmask, length, component factor -2*Re(gain)).
        The real part does not depend on orientation, so one traversal suffices.
        """
        cycles: Dict[int, List[Tuple[int, int, float]]] = {v: [] for v in range(g.n)}
        seen: Set[FrozenSet[FrozenSet[int]]] = set()
        for nodes in nx.simple_cycles(g.to_networkx()):
            if len(nodes) < 3:
                continue
            edge_key = frozenset(frozenset((nodes[i], nodes[(i + 1) % len(nodes)])) for i in range(len(nodes)))
            if edge_key in seen:
                continue
            seen.add(edge_key)
            mask = sum(1 << v for v in nodes)
            factor = -2.0 * self.cycle_gain(g, nodes).real
            cycles[min(nodes)].append((mask, len(nodes), factor))
        return cycles

    def char_poly_elementary(self, g: GainGraph) -> CharPoly:
        """
        Adjacency characteristic polynomial summed over elementary subgraphs.

        Each subgraph whose components are single edges or cycles and which
        covers i vertices contributes to a_i the product of its component
        factors: -|phi(e)|^2 per edge and -2*Re(phi(C)) per cycle.

        Raises:
            DimensionTooLargeError: If n exceeds the enumeration guard
        """
        if g.n > ELEMENTARY_MAX_DIMENSION:
            raise DimensionTooLargeError(g.n, ELEMENTARY_MAX_DIMENSION)

        n = g.n
        cycles = self._cycles_by_minimum(g)
        edge_factor = {(u, v): -abs(z) ** 2 for u, v, z in g.oriented_edges()}
        coeffs = [0.0] * (n + 1)

        # Components are attached at their smallest vertex so each subgraph is built once
        def extend(v: int, covered: int, size: int, weight: float) -> None:
            while v < n and covered & (1 << v):
                v += 1
            if v == n:
                coeffs[size] += weight
                return
            extend(v + 1, covered, size, weight)
            for w in g.neighbors(v):
                if w > v and not covered & (1 << w):
                    extend(v + 1, covered | (1 << v) | (1 << w), size + 2, weight * edge_factor[(v, w)])
            for mask, length, factor in cycles[v]:
                if not covered & mask:
                    extend(v + 1, covered | mask, size + length, weight * factor)

        extend(0, 0, 0, 1.0)
        self.logger.debug(f"Elementary-subgraph coefficients of {g!r}: {coeffs}")
        return CharPoly(tuple(coeffs))

    # ============================================================================
    # SPECTRAL CHARACTERIZATIONS
    # ============================================================================

    def associated_complete_graph(self, g: GainGraph) -> GainGraph:
        """
        Complete graph whose edge u->v carries the common distance entry of g.

        Its adjacency matrix equals the common distance matrix of g.

        Raises:
            NotDistanceCompatibleError, DisconnectedError, CapExceededError
        """
        d = self.distance_matrices.distance_matrix(g)
        edges = [(u, v, d.entry(u, v)) for u in range(g.n) for v in range(u + 1, g.n)]
        return build_graph(g.n, edges)

    def balance_via_distance_cospectrality(self, g: GainGraph) -> bool:
        """
        True iff the common distance matrix exists and is cospectral with that of
        the magnitude graph, which holds exactly for balanced, modulus-wise
        compatible graphs.

        Raises:
            DisconnectedError, CapExceededError
        """
        try:
            d = self.distance_matrices.distance_matrix(g)
        except NotDistanceCompatibleError as e:
            self.logger.info(f"No common distance matrix for {g!r}: {e}")
            return False
        d_magnitude = self.distance_matrices.distance_matrix(magnitude_graph(g))
        return cospectral(d, d_magnitude, COSPECTRAL_TOLERANCE)

    def balance_via_adjacency_cospectrality(self, g: GainGraph) -> bool:
        """True iff the adjacency spectra of g and of its magnitude graph agree."""
        return cospectral(adjacency_matrix(g), adjacency_matrix(magnitude_graph(g)), COSPECTRAL_TOLERANCE)
