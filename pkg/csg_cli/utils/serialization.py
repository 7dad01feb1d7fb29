"""
JSON and CSV emission for command results.
"""

import json
from typing import Any

import pandas as pd

from skew_gain.models.distance_matrix import DistanceMatrix

from ..constants import FLOAT_FORMAT


def to_json(payload: Any) -> str:
    """Compact single-line JSON; floats keep their shortest exact repr."""
    return json.dumps(payload, separators=(',', ':'))


def format_complex(z: complex) -> str:
    """'re+imj' with 17 significant digits per component."""
    return f"{format(z.real, FLOAT_FORMAT)}{format(z.imag, '+' + FLOAT_FORMAT)}j"


def distance_matrix_to_frame(matrix: DistanceMatrix) -> pd.DataFrame:
    """One row per source vertex, one column per target vertex."""
    cells = [[format_complex(complex(z)) for z in row] for row in matrix.entries]
    return pd.DataFrame(cells, columns=[str(v) for v in range(matrix.n)])


def distance_matrix_to_csv(matrix: DistanceMatrix) -> str:
    """Row-major CSV with a header of target indices."""
    return distance_matrix_to_frame(matrix).to_csv(index=False)
