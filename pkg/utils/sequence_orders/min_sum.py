"""
MinSum order: smaller rank sum wins, equal sums fall back to lexicographic.
"""

from typing import Tuple

from utils.model.paths import RankSequence


def sort_key(s: RankSequence) -> Tuple[int, RankSequence]:
    return sum(s), s
