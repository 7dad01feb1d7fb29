"""
Closed-form distance spectra of odd cycles with constant gain modulus.

The kernel is the arithmetico-geometric cosine sum S(p, k, t) = sum r*k^r*cos(r*t),
r = 1..p, whose closed form is f(t) / g(t) with g(t) = (1 - 2k cos t + k^2)^2.
An odd cycle C_n, n = 2p + 1, whose gains have modulus k and whose cycle gain has
argument theta has distance eigenvalues 2*S(p, k, t_j), t_j = (2*pi*j + theta) / n.
"""

import logging
import math
from typing import List, Optional

import numpy as np

from .distance_matrix_analyzer import DistanceMatrixAnalyzer
from .graph_operations import build_graph
from .spectral import hermitian_eigenvalues
from ..constants import (
    CANCELLATION_DENOMINATOR_FLOOR,
    CYCLE_SPECTRUM_TOLERANCE,
    SINE_FLOOR,
    SINGULAR_DENOMINATOR_FLOOR,
)
from ..exceptions import BadModulusError, SingularDenominatorError, ValidationError
from ..models.cycle_params import CycleParams
from ..models.gain_graph import GainGraph
from ..models.spectrum import Spectrum
from ..settings.analysis_settings import AnalysisSettings

logger = logging.getLogger(__name__)


def _check_sum_args(p: int, k: float) -> None:
    if isinstance(p, bool) or not isinstance(p, int) or p < 1:
        raise ValidationError("p", p, "Term count must be a positive integer")
    if not (math.isfinite(k) and k > 0):
        raise BadModulusError(k)


# ============================================================================
# Cosine sums
# ============================================================================

def agp_sum_direct(p: int, k: float, theta: float) -> float:
    """Direct summation of sum r*k^r*cos(r*theta) for r = 1..p."""
    _check_sum_args(p, k)
    r = np.arange(1, p + 1, dtype=float)
    return float(np.sum(r * np.power(k, r) * np.cos(r * theta)))


def agp_numerator(p: int, k: float, theta: float) -> float:
    """The six-term numerator f(theta) of the closed form."""
    _check_sum_args(p, k)
    return (p * k ** (p + 2) * math.cos((p + 2) * theta)
            - k ** (p + 1) * (p * (2 * k * k + 1) + 1) * math.cos((p + 1) * theta)
            + k ** (p + 2) * (p * (k * k + 2) + 2) * math.cos(p * theta)
            - (p + 1) * k ** (p + 3) * math.cos((p - 1) * theta)
            + k * (k * k + 1) * math.cos(theta)
            - 2 * k * k)


def agp_denominator(k: float, theta: float) -> float:
    """g(theta) = (1 - 2k cos(theta) + k^2)^2."""
    return (1.0 - 2.0 * k * math.cos(theta) + k * k) ** 2


def agp_sum_closed(p: int, k: float, theta: float) -> float:
    """
    Closed form f(theta) / g(theta) of the cosine sum.

    Raises:
        SingularDenominatorError: If |g| <= 1e-12 * (1 + k^2)^2, i.e. k ~ 1 and theta ~ 0 mod 2*pi
    """
    _check_sum_args(p, k)
    denominator = agp_denominator(k, theta)
    if abs(denominator) <= SINGULAR_DENOMINATOR_FLOOR * (1.0 + k * k) ** 2:
        raise SingularDenominatorError(k, theta, denominator)
    return agp_numerator(p, k, theta) / denominator


def _near_singular(k: float, theta: float) -> bool:
    return abs(agp_denominator(k, theta)) <= CANCELLATION_DENOMINATOR_FLOOR * (1.0 + k * k) ** 2


def agp_sum(p: int, k: float, theta: float) -> float:
    """
    Closed form, falling back to the exact direct sum where it is singular or
    close enough to singular that f and g cancel.
    """
    _check_sum_args(p, k)
    if _near_singular(k, theta):
        logger.info(f"Closed form ill-conditioned at k={k}, theta={theta}; using direct sum")
        return agp_sum_direct(p, k, theta)
    return agp_sum_closed(p, k, theta)


# ============================================================================
# Odd cycles
# ============================================================================

def canonical_odd_cycle(params: CycleParams) -> GainGraph:
    """
    Cycle 0 -> 1 -> ... -> n-1 -> 0 with gain k on every edge except the closing
    edge n-1 -> 0, which carries k*e^{i theta}. Its cycle gain is k^n * e^{i theta}.
    """
    n, k = params.n, params.k
    edges = [(j, j + 1, complex(k)) for j in range(n - 1)]
    edges.append((n - 1, 0, k * complex(math.cos(params.theta), math.sin(params.theta))))
    return build_graph(n, edges)


def switched_odd_cycle(params: CycleParams, seed: int) -> GainGraph:
    """
    Odd cycle with constant gain modulus k and random edge arguments that add
    up to theta, hence switching equivalent to the canonical cycle.
    """
    rng = np.random.default_rng(seed)
    n, k = params.n, params.k
    arguments = list(rng.uniform(-math.pi, math.pi, size=n - 1))
    arguments.append(params.theta - sum(arguments))
    edges = [
        (j, (j + 1) % n, k * complex(math.cos(a), math.sin(a)))
        for j, a in enumerate(arguments)
    ]
    return build_graph(n, edges)


def cycle_distance_spectrum_closed(params: CycleParams) -> Spectrum:
    """
    Eigenvalues 2*S(p, k, t_j) for j = 0..n-1, sorted ascending.

    Singular or near-singular t_j use the direct sum for that j only.
    """
    values = [2.0 * agp_sum(params.p, params.k, params.theta_j(j)) for j in range(params.n)]
    return Spectrum.from_values(values, tolerance=CYCLE_SPECTRUM_TOLERANCE)


def unit_cycle_eigenvalue(n: int, t: float) -> float:
    """
    Sine form of one eigenvalue of a unit-gain odd cycle at angle t.

    Falls back to the direct sum when |sin(t/2)| <= 1e-2, where the cubic
    denominator amplifies rounding in the numerator.
    """
    p = (n - 1) // 2
    s = math.sin(t / 2.0)
    if abs(s) <= SINE_FLOOR:
        return 2.0 * agp_sum_direct(p, 1.0, t)
    numerator = (n * math.sin(n * t / 2.0)
                 - ((n - 1) / 2.0) * math.sin((n + 2) * t / 2.0)
                 - ((n + 1) / 2.0) * math.sin((n - 2) * t / 2.0)
                 - 2.0 * s)
    return numerator / (4.0 * s ** 3)


def unit_cycle_spectrum_closed(n: int, theta: float) -> Spectrum:
    """
    Distance spectrum of an odd unit-gain cycle with cycle-gain argument theta.

    Raises:
        EvenLengthError: If n is even or below 3
    """
    params = CycleParams(n, 1.0, theta)
    values = [unit_cycle_eigenvalue(n, params.theta_j(j)) for j in range(n)]
    return Spectrum.from_values(values, tolerance=CYCLE_SPECTRUM_TOLERANCE)


def cycle_distance_spectrum_numeric(params: CycleParams,
                                    settings: Optional[AnalysisSettings] = None) -> Spectrum:
    """Eigenvalues of the common distance matrix of the canonical odd cycle."""
    analyzer = DistanceMatrixAnalyzer(settings)
    return hermitian_eigenvalues(analyzer.distance_matrix(canonical_odd_cycle(params)))


def singular_indices(params: CycleParams) -> List[int]:
    """Indices j whose t_j makes the closed-form denominator vanish."""
    floor = SINGULAR_DENOMINATOR_FLOOR * (1.0 + params.k ** 2) ** 2
    return [j for j in range(params.n) if abs(agp_denominator(params.k, params.theta_j(j))) <= floor]


def fallback_indices(params: CycleParams) -> List[int]:
    """Indices j for which the closed-form spectrum used the direct sum."""
    return [j for j in range(params.n) if _near_singular(params.k, params.theta_j(j))]
