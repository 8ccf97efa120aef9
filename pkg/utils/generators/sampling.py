"""
Shared sampling helpers of the generators.
"""

from typing import List, Sequence

import numpy as np

from utils.generators.rng import StreamPlan


def draw_casting(plan: StreamPlan, n: int, p_c: float) -> np.ndarray:
    """Boolean mask of casting voters, i.i.d. with probability p_c."""
    return plan.casting.random(n) < p_c


def power_weights(base_values: Sequence[float], exponent: float) -> np.ndarray:
    """
    (1 + x)^exponent for each x, rescaled so the largest weight is 1.
    """
    logs = exponent * np.log1p(np.asarray(base_values, dtype=float))
    return np.exp(logs - logs.max())


def weighted_order(rng: np.random.Generator, items: Sequence[int], weights: np.ndarray) -> List[int]:
    """
    Order items by sequential weighted sampling without replacement: the
    first position is drawn proportionally to the weights, then the next
    from the remaining items, and so on.

    Items whose weight underflowed to zero come last, in random order.
    """
    k = len(items)
    if k == 0:
        return []
    weights = np.asarray(weights, dtype=float)
    positive = np.flatnonzero(weights > 0)
    picks = []
    if len(positive):
        picks.extend(rng.choice(positive, size=len(positive), replace=False,
                                p=weights[positive] / weights[positive].sum()))
    zero = np.flatnonzero(weights <= 0)
    if len(zero):
        picks.extend(rng.permutation(zero))
    return [int(items[i]) for i in picks]


def shuffled_ties_order(rng: np.random.Generator, keys: np.ndarray) -> np.ndarray:
    """Indices sorted by increasing key; equal keys in random order."""
    tiebreak = rng.random(len(keys))
    return np.lexsort((tiebreak, keys))
