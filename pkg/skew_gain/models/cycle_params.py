"""
Parameters of an odd cycle with constant gain modulus.
"""

import math
from dataclasses import dataclass
from typing import Any, Dict

from ..exceptions import BadModulusError, EvenLengthError, ValidationError


@dataclass(frozen=True)
class CycleParams:
    """
    Odd cycle C_n with every gain of modulus k and cycle-gain argument theta.

    Attributes:
        n: Odd cycle length, n = 2p + 1 >= 3
        k: Gain modulus
        theta: Argument of the cycle gain in radians
    """
    n: int
    k: float
    theta: float

    def __post_init__(self):
        self.validate()

    def validate(self):
        """
        Raises:
            EvenLengthError: If n is even or below 3
            BadModulusError: If k is not positive and finite
            ValidationError: If theta is not finite
        """
        if isinstance(self.n, bool) or not isinstance(self.n, int) or self.n < 3 or self.n % 2 == 0:
            raise EvenLengthError(self.n)
        if not (math.isfinite(self.k) and self.k > 0):
            raise BadModulusError(self.k)
        if not math.isfinite(self.theta):
            raise ValidationError("theta", self.theta, "Theta must be finite")

    @property
    def p(self) -> int:
        return (self.n - 1) // 2

    def theta_j(self, j: int) -> float:
        """(2*pi*j + theta) / n."""
        return (2.0 * math.pi * j + self.theta) / self.n

    def to_dict(self) -> Dict[str, Any]:
        return {'n': self.n, 'k': self.k, 'theta': self.theta}
