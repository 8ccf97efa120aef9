"""
Lexicographic order: the first differing rank decides, smaller is better,
and a proper prefix beats its extensions. Induces depth-first delegation.
"""

from utils.model.paths import RankSequence


def sort_key(s: RankSequence) -> RankSequence:
    return s
