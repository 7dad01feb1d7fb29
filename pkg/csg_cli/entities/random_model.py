"""
Entity class describing a seeded random gain model.
"""

import math
from dataclasses import dataclass
from enum import Enum
from typing import Any, Dict, Tuple

from skew_gain.exceptions import ValidationError

from ..constants import DEFAULT_ARGUMENT_BOUNDS, DEFAULT_MODULUS_BOUNDS

MAX_SEED = 2 ** 64


class RandomModelKind(str, Enum):
    """How edge gains are drawn."""
    UNIT = "unit"  # modulus 1, random argument
    ANNULUS = "annulus"  # random modulus and argument
    POSITIVE_REAL = "positive-real"  # random modulus, argument 0
    BALANCED = "balanced"  # positive-real gains under a random unit switching


@dataclass(frozen=True)
class RandomModel:
    """
    Seeded gain model; the same seed and parameters always give the same graph.

    Attributes:
        kind: Gain model
        seed: Unsigned 64-bit seed
        modulus_bounds: Closed range of gain moduli (ignored by unit)
        argument_bounds: Range of gain arguments (used by unit and annulus)
    """
    kind: RandomModelKind
    seed: int
    modulus_bounds: Tuple[float, float] = DEFAULT_MODULUS_BOUNDS
    argument_bounds: Tuple[float, float] = DEFAULT_ARGUMENT_BOUNDS

    def __post_init__(self):
        if type(self.kind) is str:
            try:
                object.__setattr__(self, 'kind', RandomModelKind(self.kind))
            except ValueError:
                raise ValidationError("kind", self.kind,
                                      f"Expected one of {', '.join(k.value for k in RandomModelKind)}")
        self.validate()

    def validate(self):
        """
        Raises:
            ValidationError: If the seed or bounds are invalid
        """
        if isinstance(self.seed, bool) or not isinstance(self.seed, int) or not (0 <= self.seed < MAX_SEED):
            raise ValidationError("seed", self.seed, "Seed must be an unsigned 64-bit integer")

        low, high = self.modulus_bounds
        if not (math.isfinite(low) and math.isfinite(high) and 0 < low <= high):
            raise ValidationError("modulus_bounds", self.modulus_bounds, "Need 0 < low <= high")

        low, high = self.argument_bounds
        if not (math.isfinite(low) and math.isfinite(high) and low <= high):
            raise ValidationError("argument_bounds", self.argument_bounds, "Need low <= high")

    def to_dict(self) -> Dict[str, Any]:
        return {
            'kind': self.kind.value,
            'seed': self.seed,
            'modulus_bounds': list(self.modulus_bounds),
            'argument_bounds': list(self.argument_bounds),
        }
