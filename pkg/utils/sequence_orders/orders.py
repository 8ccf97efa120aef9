"""
Sequence order objects and the comparison entry point.

Every order exposes a total comparison over all rank sequences (smaller key
is better). `cmp` wraps it with the order's domain: the diffusion order is
only defined on comparable pairs and reports INCOMPARABLE elsewhere.
"""

import functools
from dataclasses import dataclass
from enum import Enum
from typing import Any, Callable, Dict, Optional

from utils.errors import InvalidConfig
from utils.model.paths import RankSequence
from utils.sequence_orders import breadth_first, diffusion, leximax, lexicographic, min_sum, weighted_sum
from utils.sequence_orders.weighted_sum import WeightTable


class OrderKind(Enum):
    LEX = "lex"
    BFD = "bfd"
    MINSUM = "minsum"
    WEIGHTED_SUM = "wsum"
    LEXIMAX = "leximax"
    DIFF = "diff"


class Comparison(Enum):
    BETTER = "better"
    WORSE = "worse"
    INCOMPARABLE = "incomparable"
    EQUAL = "equal"

    def flipped(self) -> "Comparison":
        if self is Comparison.BETTER:
            return Comparison.WORSE
        if self is Comparison.WORSE:
            return Comparison.BETTER
        return self


def comparable(s: RankSequence, t: RankSequence) -> bool:
    """
    True iff both are non-empty, distinct, and neither is a prefix of the other.
    """
    if not s or not t or s == t:
        return False
    k = min(len(s), len(t))
    return s[:k] != t[:k]


@dataclass(frozen=True)
class SeqOrder:
    kind: OrderKind
    weights: Optional[WeightTable] = None

    def __post_init__(self):
        if (self.kind is OrderKind.WEIGHTED_SUM) != (self.weights is not None):
            raise InvalidConfig("A weight table is required for, and only for, the weighted-sum order")

    @property
    def name(self) -> str:
        if self.kind is OrderKind.WEIGHTED_SUM:
            return f"wsum:{self.weights.describe()}"
        return self.kind.value

    @property
    def is_total(self) -> bool:
        return self.kind is not OrderKind.DIFF

    def compare_total(self, s: RankSequence, t: RankSequence) -> int:
        """Negative if s is better, positive if t is better, 0 if s == t."""
        if self.kind is OrderKind.DIFF:
            return diffusion.compare(s, t)
        key_s, key_t = self.sort_key(s), self.sort_key(t)
        return (key_s > key_t) - (key_s < key_t)

    def sort_key(self, s: RankSequence) -> Any:
        """An object whose natural order puts better sequences first."""
        if self.kind is OrderKind.WEIGHTED_SUM:
            return weighted_sum.sort_key(s, self.weights)
        return _SORT_KEYS[self.kind](s)


_SORT_KEYS: Dict[OrderKind, Callable[[RankSequence], Any]] = {
    OrderKind.LEX: lexicographic.sort_key,
    OrderKind.BFD: breadth_first.sort_key,
    OrderKind.MINSUM: min_sum.sort_key,
    OrderKind.LEXIMAX: leximax.sort_key,
    OrderKind.DIFF: functools.cmp_to_key(diffusion.compare),
}

LEX = SeqOrder(OrderKind.LEX)
BFD = SeqOrder(OrderKind.BFD)
MINSUM = SeqOrder(OrderKind.MINSUM)
LEXIMAX = SeqOrder(OrderKind.LEXIMAX)
DIFF = SeqOrder(OrderKind.DIFF)


def weighted(table: WeightTable) -> SeqOrder:
    return SeqOrder(OrderKind.WEIGHTED_SUM, table)


def cmp(order: SeqOrder, s: RankSequence, t: RankSequence) -> Comparison:
    """
    Compare s against t under the order.

    Returns BETTER when s is preferred. Total orders answer EQUAL for identical
    inputs; the diffusion order answers INCOMPARABLE outside comparable pairs.
    """
    if order.kind is OrderKind.DIFF and not comparable(s, t):
        return Comparison.INCOMPARABLE
    result = order.compare_total(s, t)
    if result < 0:
        return Comparison.BETTER
    if result > 0:
        return Comparison.WORSE
    return Comparison.EQUAL
