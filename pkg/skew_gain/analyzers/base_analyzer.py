"""
Abstract base analyzer class.
"""

import logging
from abc import ABC, abstractmethod
from typing import Generic, Optional, TypeVar

from ..models.gain_graph import GainGraph
from ..settings.analysis_settings import AnalysisSettings


T = TypeVar('T')


class BaseAnalyzer(ABC, Generic[T]):
    """
    Abstract base class for analyzers that derive one result type from a gain graph.
    """

    def __init__(self, settings: Optional[AnalysisSettings] = None):
        """
        Initialize the analyzer with shared settings.

        Args:
            settings: Analysis settings instance; defaults are read from the environment when None
        """
        self.settings = settings or AnalysisSettings()
        self.logger = logging.getLogger(__name__)

    @property
    def tolerance(self) -> float:
        return self.settings.tolerance

    @abstractmethod
    def analyze(self, graph: GainGraph) -> T:
        """
        Compute the analyzer's primary result for a graph.

        Args:
            graph: Connected gain graph

        Returns:
            Result entity

        Raises:
            DisconnectedError: If the graph is not connected
        """
        pass
