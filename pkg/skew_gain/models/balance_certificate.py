"""
Balance certificate: a switching witness for balance or a cycle witness against it.
"""

from dataclasses import dataclass
from enum import Enum
from typing import Any, Dict, Optional

from ..exceptions import ValidationError
from .gain_graph import OrientedCycle, SwitchingFunction


class BalanceStatus(str, Enum):
    """Outcome of the balance decision."""
    BALANCED = "balanced"
    UNBALANCED = "unbalanced"


@dataclass(frozen=True)
class BalanceCertificate:
    """
    Represents the balance decision with its witness.

    Attributes:
        status: balanced or unbalanced
        zeta: Switching making every gain positive real (balanced only)
        witness_cycle: Oriented cycle whose gain is not positive real (unbalanced only)
        witness_gain: Gain of the witness cycle
    """
    status: BalanceStatus
    zeta: Optional[SwitchingFunction] = None
    witness_cycle: Optional[OrientedCycle] = None
    witness_gain: Optional[complex] = None

    def __post_init__(self):
        if type(self.status) is str:
            object.__setattr__(self, 'status', BalanceStatus(self.status))
        self.validate()

    def validate(self):
        """
        Raises:
            ValidationError: If the witness does not match the status
        """
        if self.status == BalanceStatus.BALANCED:
            if self.zeta is None or self.witness_cycle is not None:
                raise ValidationError("zeta", self.zeta, "A balanced certificate carries a switching and no cycle")
        else:
            if self.witness_cycle is None or self.witness_gain is None or self.zeta is not None:
                raise ValidationError("witness_cycle", self.witness_cycle,
                                      "An unbalanced certificate carries a cycle with its gain and no switching")

    @property
    def is_balanced(self) -> bool:
        return self.status == BalanceStatus.BALANCED

    def to_dict(self) -> Dict[str, Any]:
        """
        Convert to {"status", "zeta"} or {"status", "witness_cycle"}.
        """
        result: Dict[str, Any] = {'status': self.status.value}
        if self.zeta is not None:
            result['zeta'] = self.zeta.to_dict()
        if self.witness_cycle is not None:
            result['witness_cycle'] = self.witness_cycle.to_dict(self.witness_gain)
        return result

    def __repr__(self) -> str:
        if self.is_balanced:
            return "BalanceCertificate(status='balanced')"
        return f"BalanceCertificate(status='unbalanced', witness={list(self.witness_cycle.vertices)})"
