"""
Leximax order: compare the non-increasingly sorted ranks lexicographically,
then the sequences themselves.
"""

from typing import Tuple

from utils.model.paths import RankSequence


def sort_desc(s: RankSequence) -> RankSequence:
    """Ranks of s in non-increasing order, multiplicities kept."""
    return tuple(sorted(s, reverse=True))


def sort_key(s: RankSequence) -> Tuple[RankSequence, RankSequence]:
    return sort_desc(s), s
