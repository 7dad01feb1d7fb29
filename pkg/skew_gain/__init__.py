"""
Skew Gain Package for conjugate skew gain graphs

This package provides gain graph models, shortest-path gain analysis, complex
distance matrices, balance certificates, Hermitian spectra and the closed-form
distance spectra of odd cycles.
"""

from .models import (
    BalanceCertificate,
    BalanceStatus,
    CharPoly,
    CompatibilityProperty,
    CompatibilityReport,
    CycleParams,
    DistanceMatrix,
    DistanceMatrixKind,
    GainGraph,
    GainSet,
    OrientedCycle,
    PairCompatibility,
    Spectrum,
    SwitchingFunction,
)
from .analyzers import (
    BalanceAnalyzer,
    DistanceMatrixAnalyzer,
    ShortestGainAnalyzer,
    adjacency_matrix,
    apply_switching,
    build_graph,
    char_poly,
    cospectral,
    hermitian_eigenvalues,
    is_hermitian,
    magnitude_graph,
)
from .settings import AnalysisSettings
from .exceptions import (
    SkewGainError,
    ValidationError,
    DisconnectedError,
    NotDistanceCompatibleError,
    CapExceededError,
    GraphFileError,
)

__version__ = "1.0.0"
__all__ = [
    "GainGraph",
    "SwitchingFunction",
    "OrientedCycle",
    "GainSet",
    "CompatibilityProperty",
    "CompatibilityReport",
    "PairCompatibility",
    "DistanceMatrix",
    "DistanceMatrixKind",
    "BalanceCertificate",
    "BalanceStatus",
    "Spectrum",
    "CharPoly",
    "CycleParams",
    "ShortestGainAnalyzer",
    "DistanceMatrixAnalyzer",
    "BalanceAnalyzer",
    "AnalysisSettings",
    "adjacency_matrix",
    "apply_switching",
    "build_graph",
    "char_poly",
    "cospectral",
    "hermitian_eigenvalues",
    "is_hermitian",
    "magnitude_graph",
    "SkewGainError",
    "ValidationError",
    "DisconnectedError",
    "NotDistanceCompatibleError",
    "CapExceededError",
    "GraphFileError",
]
