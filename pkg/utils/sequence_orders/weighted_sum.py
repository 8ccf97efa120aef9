"""
Weighted-sum order: sequences are ranked by the sum of w(rank) over their
entries, with lexicographic tie-breaking. MinSum is the case w(r) = r.

Weights are given as a table for ranks 1..k; ranks beyond the table follow
the affine extension through the last two entries (or w(r) = r * w(1) for a
single-entry table). Weights must increase strictly, so the extension does
too. All arithmetic is exact.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Tuple

from utils.errors import InvalidConfig
from utils.model.paths import RankSequence

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class WeightTable:
    values: Tuple[Fraction, ...]

    def __post_init__(self):
        if not self.values:
            raise InvalidConfig("Weight table needs at least one entry")
        if self.values[0] < 0:
            raise InvalidConfig("Weights must be non-negative")
        if len(self.values) == 1 and self.values[0] == 0:
            raise InvalidConfig("A single-entry table needs w(1) > 0")
        for lower, upper in zip(self.values, self.values[1:]):
            if upper <= lower:
                raise InvalidConfig(f"Weights must be strictly increasing, got {lower} then {upper}")

    @classmethod
    def identity(cls, size: int = 1) -> "WeightTable":
        return cls(tuple(Fraction(r) for r in range(1, size + 1)))

    @classmethod
    def parse(cls, text: str) -> "WeightTable":
        """
        Parse "1=1,2=3,3=7" (values may be integers, decimals or fractions like 1/2).
        """
        entries = {}
        for item in text.split(','):
            item = item.strip()
            if not item:
                continue
            if '=' not in item:
                raise InvalidConfig(f"Weight entry '{item}' is not of the form rank=value")
            rank_text, value_text = item.split('=', 1)
            try:
                rank = int(rank_text)
                value = Fraction(value_text.strip())
            except ValueError:
                raise InvalidConfig(f"Cannot parse weight entry '{item}'") from None
            if rank in entries:
                raise InvalidConfig(f"Rank {rank} given twice in weight table")
            entries[rank] = value
        if sorted(entries) != list(range(1, len(entries) + 1)):
            raise InvalidConfig(f"Weight table must cover ranks 1..k, got {sorted(entries)}")
        return cls(tuple(entries[r] for r in range(1, len(entries) + 1)))

    @property
    def slope(self) -> Fraction:
        if len(self.values) == 1:
            return self.values[0]
        return self.values[-1] - self.values[-2]

    def weight(self, rank: int) -> Fraction:
        k = len(self.values)
        if rank <= k:
            return self.values[rank - 1]
        return self.values[-1] + (rank - k) * self.slope

    @property
    def strictly_positive(self) -> bool:
        return self.values[0] > 0

    def describe(self) -> str:
        return ','.join(f"{r}={v}" for r, v in enumerate(self.values, start=1))


def total(s: RankSequence, table: WeightTable) -> Fraction:
    return sum((table.weight(r) for r in s), Fraction(0))


def sort_key(s: RankSequence, table: WeightTable) -> Tuple[Fraction, RankSequence]:
    return total(s, table), s
