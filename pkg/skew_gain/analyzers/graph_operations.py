"""
Construction, switching and structural queries on gain graphs.
"""

import logging
from typing import Dict, FrozenSet, Iterable, List, Optional, Tuple

import networkx as nx
import numpy as np

from ..exceptions import DisconnectedError, DuplicateEdgeError, LengthMismatchError, ValidationError
from ..models.gain_graph import Edge, GainGraph, SwitchingFunction, canonical_edge, validate_vertex

logger = logging.getLogger(__name__)

EdgeRecord = Tuple[int, int, complex]


# ============================================================================
# Construction
# ============================================================================

def build_graph(n: int, edge_list: Iterable[EdgeRecord]) -> GainGraph:
    """
    Build a gain graph from oriented edge records.

    Args:
        n: Vertex count
        edge_list: (u, v, gain) meaning gain(u->v) = gain; gain(v->u) is its conjugate

    Returns:
        Immutable GainGraph

    Raises:
        SelfLoopError, DuplicateEdgeError, ZeroGainError, BadVertexError
    """
    if isinstance(n, bool) or not isinstance(n, int) or n < 0:
        raise ValidationError("n", n, "Vertex count must be a non-negative integer")

    edges: Dict[Edge, complex] = {}
    for u, v, gain in edge_list:
        key, z = canonical_edge(n, u, v, gain)
        if key in edges:
            raise DuplicateEdgeError(u, v)
        edges[key] = z

    return GainGraph(n, edges)


def gain(g: GainGraph, u: int, v: int) -> complex:
    """Gain of the oriented edge u->v (conjugate of v->u). Raises NotAdjacentError."""
    return g.gain(u, v)


def induced_subgraph(g: GainGraph, vertices: Iterable[int]) -> Tuple[GainGraph, Tuple[int, ...]]:
    """
    Subgraph induced on a vertex set, relabelled 0..k-1 in ascending vertex order.

    Returns:
        (subgraph, mapping) where mapping[new_index] is the original vertex
    """
    mapping = tuple(sorted({validate_vertex(v, g.n) for v in vertices}))
    index = {old: new for new, old in enumerate(mapping)}
    edges = [
        (index[u], index[v], z)
        for u, v, z in g.oriented_edges()
        if u in index and v in index
    ]
    return build_graph(len(mapping), edges), mapping


# ============================================================================
# Switching
# ============================================================================

def apply_switching(g: GainGraph, zeta: SwitchingFunction) -> GainGraph:
    """
    Switch every gain: phi'(u->v) = conj(zeta(u)) * phi(u->v) * zeta(v).

    Raises:
        LengthMismatchError: If zeta does not have one value per vertex
    """
    if len(zeta) != g.n:
        raise LengthMismatchError(g.n, len(zeta))
    switched = {
        (u, v): zeta[u].conjugate() * z * zeta[v]
        for u, v, z in g.oriented_edges()
    }
    return GainGraph(g.n, switched)


def conjugate_switching(zeta: SwitchingFunction) -> SwitchingFunction:
    """Pointwise conjugate; undoes apply_switching with zeta."""
    return zeta.conjugate()


def switching_matrix(zeta: SwitchingFunction) -> np.ndarray:
    """
    Unitary diagonal S = diag(zeta).

    For the switching rule conj(zeta(u)) * phi * zeta(v), any matrix M indexed by
    oriented pairs (adjacency or common distance matrix) switches as S^H M S.
    """
    return np.diag(np.array(zeta.zeta, dtype=np.complex128))


def magnitude_graph(g: GainGraph) -> GainGraph:
    """Same topology with each gain replaced by its modulus."""
    return GainGraph(g.n, {(u, v): complex(abs(z)) for u, v, z in g.oriented_edges()})


# ============================================================================
# Structure
# ============================================================================

def connected_components(g: GainGraph) -> List[FrozenSet[int]]:
    """Vertex sets of the connected components, ordered by smallest vertex."""
    components = [frozenset(c) for c in nx.connected_components(g.to_networkx())]
    return sorted(components, key=min)


def is_connected(g: GainGraph) -> bool:
    return g.n > 0 and len(connected_components(g)) == 1


def require_connected(g: GainGraph) -> None:
    """
    Raises:
        DisconnectedError: If the underlying graph is not connected
    """
    if g.n == 0:
        raise DisconnectedError(0, 0)
    count = len(connected_components(g))
    if count != 1:
        raise DisconnectedError(g.n, count)


def is_bipartite(g: GainGraph) -> Tuple[bool, Optional[Tuple[int, ...]]]:
    """
    Two-colorability of the underlying graph.

    Returns:
        (True, color per vertex) or (False, None)
    """
    graph = g.to_networkx()
    if not nx.is_bipartite(graph):
        return False, None
    coloring = nx.bipartite.color(graph)
    return True, tuple(coloring[v] for v in range(g.n))


def blocks(g: GainGraph) -> List[FrozenSet[int]]:
    """
    Biconnected components (bridges included as two-vertex blocks).

    Raises:
        DisconnectedError: If g is not connected
    """
    require_connected(g)
    components = [frozenset(c) for c in nx.biconnected_components(g.to_networkx())]
    return sorted(components, key=lambda c: sorted(c))


def adjacency_matrix(g: GainGraph) -> np.ndarray:
    """
    Adjacency matrix with a_ij = phi(v_i -> v_j) for adjacent pairs, else 0.

    The matrix is exactly Hermitian because a_ji is written as the conjugate of a_ij.
    """
    a = np.zeros((g.n, g.n), dtype=np.complex128)
    for u, v, z in g.oriented_edges():
        a[u, v] = z
        a[v, u] = z.conjugate()
    return a

