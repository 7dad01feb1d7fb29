"""
Spectrum and characteristic polynomial models.
"""

from dataclasses import dataclass
from typing import Any, Dict, Sequence, Tuple, Union

import numpy as np

from ..exceptions import ValidationError

Coefficient = Union[float, complex]


@dataclass(frozen=True)
class Spectrum:
    """
    Real eigenvalues sorted ascending.

    Attributes:
        values: Eigenvalues, ascending
        tolerance: Accuracy attached to each value
    """
    values: Tuple[float, ...]
    tolerance: float

    def __post_init__(self):
        object.__setattr__(self, 'values', tuple(float(v) for v in self.values))
        self.validate()

    def validate(self):
        """
        Raises:
            ValidationError: If values are not sorted
        """
        if any(b < a for a, b in zip(self.values, self.values[1:])):
            raise ValidationError("values", self.values, "Spectrum values must be sorted ascending")

    @classmethod
    def from_values(cls, values: Sequence[float], tolerance: float) -> 'Spectrum':
        return cls(tuple(sorted(float(v) for v in values)), tolerance)

    def __len__(self) -> int:
        return len(self.values)

    def as_array(self) -> np.ndarray:
        return np.array(self.values, dtype=float)

    def to_dict(self) -> Dict[str, Any]:
        return {'values': list(self.values), 'tolerance': self.tolerance}


@dataclass(frozen=True)
class CharPoly:
    """
    Monic characteristic polynomial, degree-descending coefficients a0..an with a0 = 1.
    """
    coeffs: Tuple[Coefficient, ...]

    def __post_init__(self):
        object.__setattr__(self, 'coeffs', tuple(self.coeffs))
        self.validate()

    def validate(self):
        """
        Raises:
            ValidationError: If the polynomial is not monic
        """
        if not self.coeffs or self.coeffs[0] != 1:
            raise ValidationError("coeffs", self.coeffs, "Characteristic polynomial must be monic")

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_real(self) -> bool:
        return all(not isinstance(c, complex) for c in self.coeffs)

    def evaluate(self, x: complex) -> complex:
        """Horner evaluation."""
        result: complex = 0
        for c in self.coeffs:
            result = result * x + c
        return result

    def to_dict(self) -> Dict[str, Any]:
        if self.is_real:
            return {'coeffs': [float(c) for c in self.coeffs]}
        return {'coeffs': [[complex(c).real, complex(c).imag] for c in self.coeffs]}

    def __repr__(self) -> str:
        return f"CharPoly(degree={self.degree}, coeffs={list(self.coeffs)})"
