"""
Distance compatibility report for a connected gain graph.
"""

from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Dict, Mapping, Optional, Tuple

Pair = Tuple[int, int]


class CompatibilityProperty(str, Enum):
    """The two independent compatibility properties."""
    ARGUMENT_WISE = "argument_wise"
    MODULUS_WISE = "modulus_wise"


@dataclass(frozen=True)
class PairCompatibility:
    """Compatibility flags of one vertex pair."""
    argument_wise: bool
    modulus_wise: bool

    @property
    def distance_compatible(self) -> bool:
        return self.argument_wise and self.modulus_wise

    def __iter__(self):
        # Unpacks as (argument_wise, modulus_wise)
        return iter((self.argument_wise, self.modulus_wise))


@dataclass(frozen=True)
class CompatibilityWitness:
    """A pair and two of its shortest-path gains showing a failed property."""
    pair: Pair
    gains: Tuple[complex, complex]

    def to_dict(self) -> Dict[str, Any]:
        return {
            'pair': list(self.pair),
            'gains': [[z.real, z.imag] for z in self.gains],
        }


@dataclass(frozen=True)
class CompatibilityReport:
    """
    Per-pair and graph-level compatibility flags.

    Attributes:
        per_pair: Flags for every ordered pair of distinct vertices
        graph_argument_wise: Conjunction of the per-pair argument-wise flags
        graph_modulus_wise: Conjunction of the per-pair modulus-wise flags
        graph_distance_compatible: Both of the above
        witnesses: First failing pair (in vertex order) for each failed property
    """
    per_pair: Mapping[Pair, PairCompatibility]
    graph_argument_wise: bool
    graph_modulus_wise: bool
    graph_distance_compatible: bool
    witnesses: Mapping[CompatibilityProperty, CompatibilityWitness] = field(default_factory=dict)

    @classmethod
    def aggregate(cls,
                  per_pair: Mapping[Pair, PairCompatibility],
                  witnesses: Mapping[CompatibilityProperty, CompatibilityWitness]) -> 'CompatibilityReport':
        """Build the report, deriving graph flags as conjunctions of the pair flags."""
        argument_wise = all(flags.argument_wise for flags in per_pair.values())
        modulus_wise = all(flags.modulus_wise for flags in per_pair.values())
        return cls(
            per_pair=dict(per_pair),
            graph_argument_wise=argument_wise,
            graph_modulus_wise=modulus_wise,
            graph_distance_compatible=argument_wise and modulus_wise,
            witnesses=dict(witnesses),
        )

    def witness(self, prop: CompatibilityProperty) -> Optional[CompatibilityWitness]:
        return self.witnesses.get(prop)

    def first_failure(self) -> Optional[Tuple[CompatibilityProperty, CompatibilityWitness]]:
        """The failing witness with the smallest pair, argument-wise first on ties."""
        if not self.witnesses:
            return None
        return min(self.witnesses.items(),
                   key=lambda item: (item[1].pair, item[0] != CompatibilityProperty.ARGUMENT_WISE))

    def to_dict(self, include_pairs: bool = False) -> Dict[str, Any]:
        """
        Convert the report to a dictionary.

        Args:
            include_pairs: Whether to include the per-pair flags

        Returns:
            {"argument_wise", "modulus_wise", "distance_compatible", "witnesses"}
        """
        result: Dict[str, Any] = {
            'argument_wise': self.graph_argument_wise,
            'modulus_wise': self.graph_modulus_wise,
            'distance_compatible': self.graph_distance_compatible,
            'witnesses': {prop.value: w.to_dict() for prop, w in self.witnesses.items()},
        }
        if include_pairs:
            result['pairs'] = [
                {'pair': [u, v], 'argument_wise': f.argument_wise, 'modulus_wise': f.modulus_wise}
                for (u, v), f in sorted(self.per_pair.items())
            ]
        return result
