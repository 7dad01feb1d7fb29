"""
Entity classes for parsed graph files.

A GraphFile keeps the source line of every edge record so that build errors
can be reported against the line that caused them.
"""

from dataclasses import dataclass, field
from typing import Dict, List

from skew_gain.exceptions import DuplicateEdgeError, GraphFileError, SkewGainError
from skew_gain.models.gain_graph import Edge, GainGraph, canonical_edge

from ..constants import FORMAT_VERSION


@dataclass(frozen=True)
class EdgeRecord:
    """One `e` or `ep` line: gain(u->v) = gain."""
    u: int
    v: int
    gain: complex
    line: int


@dataclass
class GraphFile:
    """Container for the contents of one graph file."""
    vertex_count: int
    version: int = FORMAT_VERSION
    edges: List[EdgeRecord] = field(default_factory=list)  # in file order
    labels: Dict[int, str] = field(default_factory=dict)  # vertex index -> label

    def to_graph(self) -> GainGraph:
        """
        Build the gain graph, attributing any build error to its line.

        Raises:
            GraphFileError: Wrapping SelfLoop, DuplicateEdge, ZeroGain or BadVertex
        """
        edges: Dict[Edge, complex] = {}
        for record in self.edges:
            try:
                key, gain = canonical_edge(self.vertex_count, record.u, record.v, record.gain)
                if key in edges:
                    raise DuplicateEdgeError(record.u, record.v)
            except SkewGainError as e:
                raise GraphFileError(record.line, str(e), cause=e)
            edges[key] = gain
        return GainGraph(self.vertex_count, edges)

    def get_stats(self) -> Dict[str, int]:
        """Get summary statistics."""
        return {
            'n': self.vertex_count,
            'edge_records': len(self.edges),
            'labels': len(self.labels),
        }
