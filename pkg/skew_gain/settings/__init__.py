"""
Settings package initialization.
"""

from .analysis_settings import AnalysisSettings

__all__ = ["AnalysisSettings"]
