"""
Models package initialization.
"""

from .gain_graph import GainGraph, SwitchingFunction, OrientedCycle
from .gain_set import GainSet
from .compatibility_report import (
    CompatibilityProperty,
    CompatibilityReport,
    CompatibilityWitness,
    PairCompatibility,
)
from .distance_matrix import DistanceMatrix, DistanceMatrixKind
from .balance_certificate import BalanceCertificate, BalanceStatus
from .spectrum import Spectrum, CharPoly
from .cycle_params import CycleParams

__all__ = [
    "GainGraph",
    "SwitchingFunction",
    "OrientedCycle",
    "GainSet",
    "CompatibilityProperty",
    "CompatibilityReport",
    "CompatibilityWitness",
    "PairCompatibility",
    "DistanceMatrix",
    "DistanceMatrixKind",
    "BalanceCertificate",
    "BalanceStatus",
    "Spectrum",
    "CharPoly",
    "CycleParams",
]
