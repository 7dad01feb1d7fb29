"""Utilities for the csg command-line front end."""

from .graph_file_io import parse_graph_file, parse_graph_file_with_labels, read_graph_file, serialize_graph_file
from .generators import random_csg, random_switching
from .serialization import distance_matrix_to_csv, to_json

__all__ = [
    'parse_graph_file',
    'parse_graph_file_with_labels',
    'read_graph_file',
    'serialize_graph_file',
    'random_csg',
    'random_switching',
    'distance_matrix_to_csv',
    'to_json',
]
