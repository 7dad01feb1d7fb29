"""
Analysis settings: tunables read from arguments or the environment.
"""

import os
import logging
from concurrent.futures import ThreadPoolExecutor
from contextlib import contextmanager
from typing import Any, Callable, Dict, Generator, Iterable, List, Optional, TypeVar

from ..constants import DEFAULT_GAIN_SET_CAP, DEFAULT_MAX_WORKERS, DEFAULT_TOLERANCE
from ..exceptions import ValidationError

T = TypeVar('T')
R = TypeVar('R')

SourceMapper = Callable[[Callable[[T], R], Iterable[T]], List[R]]


class AnalysisSettings:
    """
    Holds the tunables shared by all analyzers.

    Explicit arguments win over environment variables, which win over the
    library defaults.
    """

    def __init__(self,
                 gain_set_cap: Optional[int] = None,
                 tolerance: Optional[float] = None,
                 max_workers: Optional[int] = None):
        """
        Initialize the analysis settings.

        Args:
            gain_set_cap: Distinct gains allowed per DAG vertex. If None, reads CSG_GAIN_SET_CAP.
            tolerance: Relative comparison tolerance. If None, reads CSG_TOLERANCE.
            max_workers: Worker threads for per-source passes. If None, reads CSG_MAX_WORKERS.
        """
        self.logger = logging.getLogger(__name__)

        self.gain_set_cap = gain_set_cap if gain_set_cap is not None else self._read_env(
            'CSG_GAIN_SET_CAP', int, DEFAULT_GAIN_SET_CAP)
        self.tolerance = tolerance if tolerance is not None else self._read_env(
            'CSG_TOLERANCE', float, DEFAULT_TOLERANCE)
        self.max_workers = max_workers if max_workers is not None else self._read_env(
            'CSG_MAX_WORKERS', int, DEFAULT_MAX_WORKERS)

        self.validate()

    @staticmethod
    def _read_env(name: str, cast: Callable[[str], Any], default: Any) -> Any:
        raw = os.getenv(name)
        if raw is None or not raw.strip():
            return default
        try:
            return cast(raw.strip())
        except ValueError:
            raise ValidationError(name, raw, f"Cannot interpret environment value as {cast.__name__}")

    def validate(self) -> None:
        """
        Validate the settings.

        Raises:
            ValidationError: If validation fails
        """
        if self.gain_set_cap < 1:
            raise ValidationError("gain_set_cap", self.gain_set_cap, "Gain set cap must be at least 1")

        if not (0.0 < self.tolerance < 1.0):
            raise ValidationError("tolerance", self.tolerance, "Tolerance must lie strictly between 0 and 1")

        if self.max_workers < 1:
            raise ValidationError("max_workers", self.max_workers, "At least one worker is required")

    @contextmanager
    def worker_pool_context(self) -> Generator[SourceMapper, None, None]:
        """
        Context manager yielding an ordered map over independent per-source jobs.

        With a single worker the jobs run inline; otherwise a thread pool is
        used and results are still returned in input order.

        Yields:
            Callable with the signature of ``map`` returning a list
        """
        if self.max_workers == 1:
            yield lambda fn, items: [fn(item) for item in items]
            return

        executor = ThreadPoolExecutor(max_workers=self.max_workers)
        self.logger.debug(f"Started worker pool with {self.max_workers} threads")
        try:
            yield lambda fn, items: list(executor.map(fn, items))
        finally:
            executor.shutdown(wait=True)

    def to_dict(self) -> Dict[str, Any]:
        """Convert settings to a dictionary."""
        return {
            'gain_set_cap': self.gain_set_cap,
            'tolerance': self.tolerance,
            'max_workers': self.max_workers,
        }

    def __repr__(self) -> str:
        return (f"AnalysisSettings(gain_set_cap={self.gain_set_cap}, "
                f"tolerance={self.tolerance}, max_workers={self.max_workers})")
