"""
BordaBranching: the rank-sum minimal C-branching.
"""

import logging
from fractions import Fraction
from typing import Optional

from utils.branching.edmonds import min_cost_branching
from utils.branching.structures import Branching, PriorityOrder
from utils.model import Instance, RankedEdge

logger = logging.getLogger(__name__)


def rank_cost(edge: RankedEdge) -> Fraction:
    return Fraction(edge.rank)


def borda_branching(instance: Instance, priority: Optional[PriorityOrder] = None) -> Branching:
    """
    Minimize the sum of chosen ranks; among optimal branchings, the voter
    first in the priority order gets the smallest possible rank, then the
    next one, and so on.
    """
    branching = min_cost_branching(instance, rank_cost, priority)
    logger.debug(f"Borda branching with rank sum {branching.total_rank()}")
    return branching
