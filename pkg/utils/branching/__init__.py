"""
C-branching optimization and popularity analysis.
"""

from utils.branching.structures import Branching, PriorityOrder, branching_errors, is_branching
from utils.branching.edmonds import branching_weight, min_cost_branching, optimum_branching
from utils.branching.borda import borda_branching, rank_cost
from utils.branching.popularity import (
    best_response,
    is_popular,
    majority_margin,
    unpopularity_margin,
)

__all__ = [
    'Branching',
    'PriorityOrder',
    'branching_errors',
    'is_branching',
    'branching_weight',
    'min_cost_branching',
    'optimum_branching',
    'borda_branching',
    'rank_cost',
    'best_response',
    'is_popular',
    'majority_margin',
    'unpopularity_margin',
]
