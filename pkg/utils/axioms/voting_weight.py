"""
Relative voting weight of casting voters.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List

from utils.model import Instance, VoterId
from utils.resolver import Resolution


@dataclass(frozen=True)
class WeightVector:
    """
    Exact weight per casting voter: (voters ending at c, plus c itself)
    divided by |C| + |D|.
    """
    values: Dict[VoterId, Fraction]
    denominator: int

    def __getitem__(self, c: VoterId) -> Fraction:
        return self.values[c]

    def casting_voters(self) -> List[VoterId]:
        return sorted(self.values)

    def max_weight(self) -> Fraction:
        return max(self.values.values(), default=Fraction(0))

    def total(self) -> Fraction:
        return sum(self.values.values(), Fraction(0))

    def describe(self, instance: Instance) -> str:
        return ', '.join(f"{instance.name(c)}={self.values[c]}" for c in self.casting_voters())


def weights(instance: Instance, res: Resolution) -> WeightVector:
    """
    Isolated voters count neither in the numerator nor in the denominator.
    """
    counts = {c: 1 for c in instance.casting}
    for path in res.paths.values():
        counts[path.guru] += 1
    denominator = len(instance.casting) + len(res.paths)
    if denominator == 0:
        return WeightVector({}, 0)
    return WeightVector({c: Fraction(k, denominator) for c, k in counts.items()}, denominator)
