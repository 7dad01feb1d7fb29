"""Entities for the csg command-line front end."""

from .graph_file import EdgeRecord, GraphFile
from .random_model import RandomModel, RandomModelKind

__all__ = ['EdgeRecord', 'GraphFile', 'RandomModel', 'RandomModelKind']
