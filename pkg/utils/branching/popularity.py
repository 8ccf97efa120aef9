"""
Majority comparisons between C-branchings.

Voter v prefers the branching that gives its own outgoing edge the smaller
rank. The unpopularity margin of B is the best margin any other branching
achieves against it; since every comparison only looks at one voter's edge,
the adversary's problem is a max-weight branching with weights +1 (better
for the voter), -1 (worse) and 0 (v's edge in B).
"""

import logging
from fractions import Fraction
from typing import Tuple

from utils.branching.edmonds import optimum_branching
from utils.branching.structures import Branching
from utils.errors import MismatchedInstance
from utils.model import Instance, RankedEdge

logger = logging.getLogger(__name__)


def majority_margin(instance: Instance, first: Branching, second: Branching) -> int:
    """
    Number of voters preferring ``first`` minus number preferring ``second``.
    """
    if set(first.choice) != set(second.choice):
        raise MismatchedInstance("Branchings cover different voter sets")
    margin = 0
    for v, edge in first.choice.items():
        other = second.choice[v]
        if edge.rank < other.rank:
            margin += 1
        elif edge.rank > other.rank:
            margin -= 1
    return margin


def best_response(instance: Instance, branching: Branching) -> Tuple[int, Branching]:
    """
    The unpopularity margin of ``branching`` together with a branching that
    attains it.
    """
    def against(edge: RankedEdge) -> Fraction:
        own = branching.choice[edge.source].rank
        if edge.rank < own:
            return Fraction(1)
        if edge.rank > own:
            return Fraction(-1)
        return Fraction(0)

    response = optimum_branching(instance, against, maximize=True)
    margin = majority_margin(instance, response, branching)
    logger.debug(f"Unpopularity margin {margin}")
    return margin, response


def unpopularity_margin(instance: Instance, branching: Branching) -> int:
    margin, _ = best_response(instance, branching)
    return margin


def is_popular(instance: Instance, branching: Branching) -> bool:
    return unpopularity_margin(instance, branching) == 0
