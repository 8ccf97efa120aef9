"""
Breadth-first order: shorter sequences win, equal lengths fall back to lexicographic.
"""

from typing import Tuple

from utils.model.paths import RankSequence


def sort_key(s: RankSequence) -> Tuple[int, RankSequence]:
    return len(s), s
