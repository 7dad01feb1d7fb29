"""
Deduplicated set of shortest-path gains between an ordered vertex pair.
"""

from dataclasses import dataclass
from typing import Any, Dict, Iterator, List, Tuple

from ..exceptions import ValidationError


def gains_close(a: complex, b: complex, tolerance: float) -> bool:
    """Relative equality used for every gain comparison: |a-b| <= tol*max(1,|a|)."""
    return abs(a - b) <= tolerance * max(1.0, abs(a))


def merge_gain(values: List[complex], z: complex, tolerance: float) -> bool:
    """
    Append z to values unless an equal gain is already present.

    Returns:
        True if z was appended
    """
    for existing in values:
        if gains_close(existing, z, tolerance):
            return False
    values.append(z)
    return True


@dataclass(frozen=True)
class GainSet:
    """
    Distinct gains of all shortest oriented paths from one vertex to another.

    Attributes:
        values: Pairwise distinct gains (under dedup_tolerance)
        dedup_tolerance: Relative tolerance used to merge equal gains
        truncated: True only when the configured cap was hit
    """
    values: Tuple[complex, ...]
    dedup_tolerance: float
    truncated: bool = False

    def __post_init__(self):
        object.__setattr__(self, 'values', tuple(complex(v) for v in self.values))
        self.validate()

    def validate(self):
        """
        Raises:
            ValidationError: If two values are equal under the tolerance
        """
        if self.dedup_tolerance <= 0:
            raise ValidationError("dedup_tolerance", self.dedup_tolerance, "Tolerance must be positive")
        for i, a in enumerate(self.values):
            for b in self.values[i + 1:]:
                if gains_close(a, b, self.dedup_tolerance):
                    raise ValidationError("values", (a, b), "Gain set values must be pairwise distinct")

    def conjugate(self) -> 'GainSet':
        return GainSet(tuple(z.conjugate() for z in self.values), self.dedup_tolerance, self.truncated)

    def is_singleton(self) -> bool:
        return len(self.values) == 1

    def __len__(self) -> int:
        return len(self.values)

    def __iter__(self) -> Iterator[complex]:
        return iter(self.values)

    def to_dict(self) -> Dict[str, Any]:
        return {
            'values': [[z.real, z.imag] for z in self.values],
            'dedup_tolerance': self.dedup_tolerance,
            'truncated': self.truncated,
        }
