"""
Graph file reading and writing.

Grammar (one statement per line, `#` starts a comment):

    csg 1                 version header, first statement
    n N                   vertex count, before any vertex reference
    label i name          optional label for vertex i
    e u v re im           gain(u->v) = re + im*i
    ep u v r t            gain(u->v) = r * e^{i t}

Endpoints are vertex indices or declared labels.
"""

import cmath
import logging
from typing import Dict, List, Optional, Tuple

from skew_gain.exceptions import GraphFileError
from skew_gain.models.gain_graph import GainGraph

from ..constants import FLOAT_FORMAT, FORMAT_VERSION
from ..entities.graph_file import EdgeRecord, GraphFile

logger = logging.getLogger(__name__)


def _statements(text: str) -> List[Tuple[int, List[str]]]:
    """Non-empty statements as (1-based line number, tokens)."""
    statements = []
    for number, raw in enumerate(text.splitlines(), start=1):
        tokens = raw.split('#', 1)[0].split()
        if tokens:
            statements.append((number, tokens))
    return statements


def _parse_int(token: str, line: int, what: str) -> int:
    try:
        return int(token)
    except ValueError:
        raise GraphFileError(line, f"Expected an integer {what}, got '{token}'")


def _parse_float(token: str, line: int, what: str) -> float:
    try:
        return float(token)
    except ValueError:
        raise GraphFileError(line, f"Expected a number for {what}, got '{token}'")


def _parse_endpoint(token: str, line: int, labels: Dict[str, int]) -> int:
    if token in labels:
        return labels[token]
    try:
        return int(token)
    except ValueError:
        raise GraphFileError(line, f"Unknown vertex or label '{token}'")


def read_graph_file(text: str) -> GraphFile:
    """
    Parse graph file text into a GraphFile without building the graph.

    Raises:
        GraphFileError: With the line number of the offending statement
    """
    statements = _statements(text)
    if not statements:
        raise GraphFileError(1, "Missing 'csg <version>' header")

    line, tokens = statements[0]
    if tokens[0] != 'csg' or len(tokens) != 2:
        raise GraphFileError(line, "Expected 'csg <version>' header")
    version = _parse_int(tokens[1], line, "version")
    if version != FORMAT_VERSION:
        raise GraphFileError(line, f"Unsupported format version {version}")

    graph_file: Optional[GraphFile] = None
    labels: Dict[str, int] = {}

    for line, tokens in statements[1:]:
        keyword, args = tokens[0], tokens[1:]

        if keyword == 'n':
            if graph_file is not None:
                raise GraphFileError(line, "Vertex count declared twice")
            if len(args) != 1:
                raise GraphFileError(line, "Expected 'n <count>'")
            count = _parse_int(args[0], line, "vertex count")
            if count < 0:
                raise GraphFileError(line, f"Vertex count must be non-negative, got {count}")
            graph_file = GraphFile(vertex_count=count, version=version)
            continue

        if graph_file is None:
            raise GraphFileError(line, f"'{keyword}' before the 'n <count>' statement")

        if keyword == 'label':
            if len(args) != 2:
                raise GraphFileError(line, "Expected 'label <index> <name>'")
            index = _parse_int(args[0], line, "vertex index")
            name = args[1]
            if not (0 <= index < graph_file.vertex_count):
                raise GraphFileError(line, f"Label index {index} is out of range")
            if index in graph_file.labels or name in labels:
                raise GraphFileError(line, f"Label '{name}' or index {index} declared twice")
            if name.lstrip('-').isdigit():
                raise GraphFileError(line, f"Label '{name}' would be read as an index")
            graph_file.labels[index] = name
            labels[name] = index

        elif keyword in ('e', 'ep'):
            if len(args) != 4:
                raise GraphFileError(line, f"Expected '{keyword} <u> <v> <x> <y>'")
            u = _parse_endpoint(args[0], line, labels)
            v = _parse_endpoint(args[1], line, labels)
            x = _parse_float(args[2], line, "the first gain component")
            y = _parse_float(args[3], line, "the second gain component")
            gain = complex(x, y) if keyword == 'e' else cmath.rect(x, y)
            graph_file.edges.append(EdgeRecord(u, v, gain, line))

        else:
            raise GraphFileError(line, f"Unknown statement '{keyword}'")

    if graph_file is None:
        raise GraphFileError(statements[-1][0], "Missing 'n <count>' statement")

    logger.debug(f"Read graph file: {graph_file.get_stats()}")
    return graph_file


def parse_graph_file_with_labels(text: str) -> Tuple[GainGraph, Dict[int, str]]:
    """
    Parse and build a gain graph, keeping the declared labels.

    Raises:
        GraphFileError: For syntax errors and, with line attribution, for build errors
    """
    graph_file = read_graph_file(text)
    return graph_file.to_graph(), dict(graph_file.labels)


def parse_graph_file(text: str) -> GainGraph:
    """Parse and build a gain graph."""
    return parse_graph_file_with_labels(text)[0]


def serialize_graph_file(g: GainGraph, labels: Optional[Dict[int, str]] = None) -> str:
    """
    Write g in rectangular form, canonical orientation, 17 significant digits.

    parse_graph_file(serialize_graph_file(g)) reproduces g bit for bit.
    """
    lines = [f"csg {FORMAT_VERSION}", f"n {g.n}"]
    for index, name in sorted((labels or {}).items()):
        lines.append(f"label {index} {name}")
    for u, v, z in g.oriented_edges():
        lines.append(f"e {u} {v} {format(z.real, FLOAT_FORMAT)} {format(z.imag, FLOAT_FORMAT)}")
    return "\n".join(lines) + "\n"
