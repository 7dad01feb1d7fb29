"""
Seeded random generators for gain graphs and switching functions.
"""

import logging
import math
from typing import List, Tuple

import numpy as np

from skew_gain.analyzers.graph_operations import apply_switching, build_graph
from skew_gain.constants import TWO_PI
from skew_gain.exceptions import BadEdgeCountError
from skew_gain.models.gain_graph import GainGraph, SwitchingFunction

from ..entities.random_model import RandomModel, RandomModelKind

logger = logging.getLogger(__name__)


def _random_edges(rng: np.random.Generator, n: int, m: int) -> List[Tuple[int, int]]:
    """Random recursive spanning tree on a shuffled vertex order, then m-(n-1) extra edges."""
    order = rng.permutation(n)
    edges = set()
    for i in range(1, n):
        attach = order[rng.integers(0, i)]
        u, v = int(order[i]), int(attach)
        edges.add((min(u, v), max(u, v)))

    remaining = [(u, v) for u in range(n) for v in range(u + 1, n) if (u, v) not in edges]
    extra = m - (n - 1)
    if extra > 0:
        picks = rng.choice(len(remaining), size=extra, replace=False)
        edges.update(remaining[int(i)] for i in picks)
    return sorted(edges)


def _draw_gain(rng: np.random.Generator, model: RandomModel) -> complex:
    low, high = model.modulus_bounds
    if model.kind == RandomModelKind.UNIT:
        modulus = 1.0
    else:
        modulus = float(rng.uniform(low, high)) if high > low else low

    if model.kind in (RandomModelKind.POSITIVE_REAL, RandomModelKind.BALANCED):
        return complex(modulus)
    angle = float(rng.uniform(*model.argument_bounds))
    return complex(modulus * math.cos(angle), modulus * math.sin(angle))


def random_csg(model: RandomModel, n: int, m: int) -> GainGraph:
    """
    Connected random gain graph with n vertices and m edges.

    Args:
        model: Gain model and seed
        n: Vertex count (at least 1)
        m: Edge count, n-1 <= m <= n(n-1)/2

    Returns:
        GainGraph, identical for identical arguments

    Raises:
        BadEdgeCountError: If no connected simple graph has these counts
    """
    if n < 1 or m < n - 1 or m > n * (n - 1) // 2:
        raise BadEdgeCountError(n, m)

    rng = np.random.default_rng(model.seed)
    edges = _random_edges(rng, n, m)
    graph = build_graph(n, [(u, v, _draw_gain(rng, model)) for u, v in edges])

    if model.kind == RandomModelKind.BALANCED:
        angles = rng.uniform(0.0, TWO_PI, size=n)
        graph = apply_switching(graph, SwitchingFunction.from_angles(angles.tolist()))

    logger.debug(f"Generated {graph!r} from model {model.kind.value} with seed {model.seed}")
    return graph


def random_switching(n: int, seed: int) -> SwitchingFunction:
    """Unit switching with independent uniform arguments, deterministic in seed."""
    rng = np.random.default_rng(seed)
    return SwitchingFunction.from_angles(rng.uniform(0.0, TWO_PI, size=n).tolist())
