"""
The diffusion order.

For two sequences without a joint prefix the one with the smaller maximum
wins; with equal maxima, fewer occurrences of the maximum wins; otherwise the
parts before the first occurrence of the maximum are compared the same way,
an empty part winning. Sequences sharing a prefix are compared on what
follows it.

The order is only defined for comparable sequences. `compare` extends it to
every pair of sequences by treating the maximum of the empty sequence as 0,
which makes a proper prefix beat its extensions.
"""

from utils.model.paths import RankSequence


def common_prefix_length(s: RankSequence, t: RankSequence) -> int:
    k = 0
    for a, b in zip(s, t):
        if a != b:
            break
        k += 1
    return k


def _compare_disjoint(s: RankSequence, t: RankSequence) -> int:
    # first entries differ or one side is empty
    max_s = max(s, default=0)
    max_t = max(t, default=0)
    if max_s != max_t:
        return -1 if max_s < max_t else 1
    count_s = s.count(max_s)
    count_t = t.count(max_t)
    if count_s != count_t:
        return -1 if count_s < count_t else 1
    return _compare_disjoint(s[:s.index(max_s)], t[:t.index(max_t)])


def compare(s: RankSequence, t: RankSequence) -> int:
    """
    Negative when s is better, positive when t is better, 0 when equal.
    """
    if s == t:
        return 0
    k = common_prefix_length(s, t)
    return _compare_disjoint(s[k:], t[k:])
