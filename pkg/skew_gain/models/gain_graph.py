"""
Gain graph model: a simple graph whose oriented edges carry nonzero complex
gains that conjugate when the orientation is reversed.
"""

import cmath
from dataclasses import dataclass, field
from types import MappingProxyType
from typing import Any, Dict, Iterator, List, Mapping, Optional, Sequence, Tuple

import networkx as nx

from ..constants import UNIT_MODULUS_TOLERANCE, ZERO_GAIN_FLOOR
from ..exceptions import (
    BadVertexError,
    InvalidCycleError,
    NonUnitModulusError,
    NotAdjacentError,
    SelfLoopError,
    ValidationError,
    ZeroGainError,
)

Edge = Tuple[int, int]


def validate_scalar(field_name: str, value: Any) -> complex:
    """
    Coerce a value to a finite complex scalar.

    Raises:
        ValidationError: If the value is not a finite number
    """
    try:
        z = complex(value)
    except (TypeError, ValueError):
        raise ValidationError(field_name, value, "Value is not a complex number")
    if not cmath.isfinite(z):
        raise ValidationError(field_name, value, "Value must be finite")
    return z


def validate_vertex(vertex: Any, n: int) -> int:
    """Return the vertex as an int, raising BadVertexError when out of range."""
    if isinstance(vertex, bool) or not isinstance(vertex, int) or not (0 <= vertex < n):
        raise BadVertexError(vertex, n)
    return vertex


def canonical_edge(n: int, u: Any, v: Any, gain: Any) -> Tuple[Edge, complex]:
    """
    Validate one oriented edge record and return it in canonical orientation.

    The canonical key is (lower index, higher index); the stored gain is the gain
    of that orientation, so a record given as v->u is conjugated.

    Raises:
        BadVertexError, SelfLoopError, ZeroGainError, ValidationError
    """
    u = validate_vertex(u, n)
    v = validate_vertex(v, n)
    if u == v:
        raise SelfLoopError(u)
    z = validate_scalar("gain", gain)
    if abs(z) <= ZERO_GAIN_FLOOR:
        raise ZeroGainError(u, v, z)
    if u < v:
        return (u, v), z
    return (v, u), z.conjugate()


@dataclass(frozen=True, eq=False)
class GainGraph:
    """
    Immutable conjugate skew gain graph on vertices 0..n-1.

    Attributes:
        n: Vertex count
        edges: Canonical edge (u, v) with u < v mapped to the gain of u->v
    """
    n: int
    edges: Mapping[Edge, complex]
    _adjacency: Tuple[Tuple[int, ...], ...] = field(init=False, repr=False)

    def __post_init__(self):
        """Freeze the edge map, validate it and build adjacency lists."""
        object.__setattr__(self, 'edges', MappingProxyType(dict(self.edges)))
        self.validate()

        neighbors: List[List[int]] = [[] for _ in range(self.n)]
        for u, v in self.edges:
            neighbors[u].append(v)
            neighbors[v].append(u)
        object.__setattr__(self, '_adjacency', tuple(tuple(sorted(adj)) for adj in neighbors))

    def validate(self):
        """
        Validate graph data.

        Raises:
            ValidationError: If the vertex count is invalid
            BadVertexError, SelfLoopError, ZeroGainError: For invalid edges
        """
        if isinstance(self.n, bool) or not isinstance(self.n, int) or self.n < 0:
            raise ValidationError("n", self.n, "Vertex count must be a non-negative integer")

        for (u, v), gain in self.edges.items():
            key, _ = canonical_edge(self.n, u, v, gain)
            if key != (u, v):
                raise ValidationError("edges", (u, v), "Edge keys must be stored as (lower, higher)")

    # ============================================================================
    # QUERIES
    # ============================================================================

    @property
    def m(self) -> int:
        """Number of edges."""
        return len(self.edges)

    def has_edge(self, u: int, v: int) -> bool:
        """Check whether u and v are adjacent."""
        return (min(u, v), max(u, v)) in self.edges and u != v

    def gain(self, u: int, v: int) -> complex:
        """
        Gain of the oriented edge u->v.

        Raises:
            BadVertexError: If a vertex is out of range
            NotAdjacentError: If u and v are not adjacent
        """
        validate_vertex(u, self.n)
        validate_vertex(v, self.n)
        if u < v and (u, v) in self.edges:
            return self.edges[(u, v)]
        if v < u and (v, u) in self.edges:
            return self.edges[(v, u)].conjugate()
        raise NotAdjacentError(u, v)

    def neighbors(self, v: int) -> Tuple[int, ...]:
        """Sorted neighbors of v."""
        return self._adjacency[validate_vertex(v, self.n)]

    def oriented_edges(self) -> Iterator[Tuple[int, int, complex]]:
        """Yield (u, v, gain) in canonical orientation, sorted by edge."""
        for (u, v) in sorted(self.edges):
            yield u, v, self.edges[(u, v)]

    def to_networkx(self) -> nx.Graph:
        """Underlying simple graph with the canonical gain stored as edge attribute ``gain``."""
        graph = nx.Graph()
        graph.add_nodes_from(range(self.n))
        for u, v, gain in self.oriented_edges():
            graph.add_edge(u, v, gain=gain)
        return graph

    # ============================================================================
    # SERIALIZATION
    # ============================================================================

    def to_dict(self) -> Dict[str, Any]:
        """
        Convert the graph to a dictionary.

        Returns:
            {"n": int, "edges": [[u, v, re, im], ...]} in canonical orientation
        """
        return {
            'n': self.n,
            'edges': [[u, v, gain.real, gain.imag] for u, v, gain in self.oriented_edges()],
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> 'GainGraph':
        """
        Create a GainGraph from a dictionary produced by ``to_dict``.

        Edges may be given in either orientation; duplicates are rejected
        through the same checks as ``build_graph``.
        """
        from ..analyzers.graph_operations import build_graph

        edge_list = [(int(u), int(v), complex(re, im)) for u, v, re, im in data.get('edges', [])]
        return build_graph(int(data['n']), edge_list)

    def __repr__(self) -> str:
        return f"GainGraph(n={self.n}, m={self.m})"

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, GainGraph):
            return False
        return self.n == other.n and dict(self.edges) == dict(other.edges)

    def __hash__(self) -> int:
        return hash((self.n, frozenset(self.edges.items())))


@dataclass(frozen=True)
class SwitchingFunction:
    """
    Unit-modulus value per vertex.

    Attributes:
        zeta: One complex value per vertex, each on the unit circle
    """
    zeta: Tuple[complex, ...]

    def __post_init__(self):
        object.__setattr__(self, 'zeta', tuple(validate_scalar("zeta", z) for z in self.zeta))
        self.validate()

    def validate(self):
        """
        Validate switching values.

        Raises:
            NonUnitModulusError: If some value is off the unit circle
        """
        for vertex, z in enumerate(self.zeta):
            if abs(abs(z) - 1.0) > UNIT_MODULUS_TOLERANCE:
                raise NonUnitModulusError(vertex, z)

    @classmethod
    def identity(cls, n: int) -> 'SwitchingFunction':
        return cls(tuple(1 + 0j for _ in range(n)))

    @classmethod
    def from_angles(cls, angles: Sequence[float]) -> 'SwitchingFunction':
        """Build e^{i angle} per vertex."""
        return cls(tuple(cmath.exp(1j * a) for a in angles))

    def conjugate(self) -> 'SwitchingFunction':
        return SwitchingFunction(tuple(z.conjugate() for z in self.zeta))

    def __len__(self) -> int:
        return len(self.zeta)

    def __getitem__(self, vertex: int) -> complex:
        return self.zeta[vertex]

    def to_dict(self) -> List[List[float]]:
        return [[z.real, z.imag] for z in self.zeta]


@dataclass(frozen=True)
class OrientedCycle:
    """
    Cycle v0 v1 ... vk traversed in this order and closed by vk -> v0.

    Adjacency in a particular graph is checked where the cycle is used.
    """
    vertices: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, 'vertices', tuple(self.vertices))
        self.validate()

    def validate(self):
        """
        Raises:
            InvalidCycleError: If the cycle is too short or repeats a vertex
        """
        if len(self.vertices) < 3:
            raise InvalidCycleError(self.vertices, "a cycle needs at least 3 vertices")
        if len(set(self.vertices)) != len(self.vertices):
            raise InvalidCycleError(self.vertices, "vertices must be distinct")

    def oriented_edges(self) -> Iterator[Edge]:
        """Yield consecutive pairs including the closing edge."""
        k = len(self.vertices)
        for i in range(k):
            yield self.vertices[i], self.vertices[(i + 1) % k]

    def reversed(self) -> 'OrientedCycle':
        """Same cycle traversed the other way, starting from the same vertex."""
        return OrientedCycle((self.vertices[0],) + tuple(reversed(self.vertices[1:])))

    def __len__(self) -> int:
        return len(self.vertices)

    def to_dict(self, gain: Optional[complex] = None) -> Dict[str, Any]:
        result: Dict[str, Any] = {'vertices': list(self.vertices)}
        if gain is not None:
            result['gain'] = [gain.real, gain.imag]
        return result
