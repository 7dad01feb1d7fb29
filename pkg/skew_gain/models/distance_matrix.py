"""
Complex distance matrix model (D^max, D^min or the common D).
"""

from dataclasses import dataclass
from enum import Enum
from typing import Any, Dict, List

import numpy as np

from ..exceptions import ValidationError


class DistanceMatrixKind(str, Enum):
    """Which distance measure the entries realize."""
    MAX = "max"
    MIN = "min"
    COMPATIBLE = "compatible"


@dataclass(frozen=True, eq=False)
class DistanceMatrix:
    """
    Dense n x n complex distance matrix.

    Attributes:
        n: Dimension
        entries: Read-only complex128 array of shape (n, n)
        kind: max, min or compatible
        hermitian: Whether entry (v, u) is the conjugate of entry (u, v)
    """
    n: int
    entries: np.ndarray
    kind: DistanceMatrixKind
    hermitian: bool

    def __post_init__(self):
        entries = np.array(self.entries, dtype=np.complex128)
        entries.setflags(write=False)
        object.__setattr__(self, 'entries', entries)
        if type(self.kind) is str:
            object.__setattr__(self, 'kind', DistanceMatrixKind(self.kind))
        self.validate()

    def validate(self):
        """
        Validate matrix data.

        Raises:
            ValidationError: If validation fails
        """
        if self.entries.shape != (self.n, self.n):
            raise ValidationError("entries", self.entries.shape, f"Expected shape ({self.n}, {self.n})")

        if self.n and np.any(np.diagonal(self.entries) != 0):
            raise ValidationError("entries", "diagonal", "Distance matrix must have a zero diagonal")

        if self.kind == DistanceMatrixKind.COMPATIBLE and not self.hermitian:
            raise ValidationError("hermitian", self.hermitian, "A compatible distance matrix must be Hermitian")

    def entry(self, u: int, v: int) -> complex:
        return complex(self.entries[u, v])

    def to_dict(self, include_hermitian: bool = False) -> Dict[str, Any]:
        """
        Convert to the JSON schema {"n", "kind", "entries"} with row-major [re, im] pairs.

        Args:
            include_hermitian: Whether to add the Hermitian flag
        """
        flat: List[List[float]] = [[float(z.real), float(z.imag)] for z in self.entries.ravel()]
        result: Dict[str, Any] = {
            'n': self.n,
            'kind': self.kind.value,
            'entries': flat,
        }
        if include_hermitian:
            result['hermitian'] = self.hermitian
        return result

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> 'DistanceMatrix':
        """Create a DistanceMatrix from its JSON form; the Hermitian flag is recomputed."""
        from ..analyzers.spectral import is_hermitian

        n = int(data['n'])
        entries = np.array([complex(re, im) for re, im in data['entries']], dtype=np.complex128).reshape(n, n)
        return cls(n=n, entries=entries, kind=DistanceMatrixKind(data['kind']),
                   hermitian=is_hermitian(entries))

    def __repr__(self) -> str:
        return f"DistanceMatrix(n={self.n}, kind='{self.kind.value}', hermitian={self.hermitian})"
