"""
Brute-force ground truth for small instances.

Everything here enumerates: all delegation paths of a voter, all
C-branchings of an instance, all challengers of a branching. Budgets keep
runs bounded and fail loudly when exceeded.
"""

import itertools
import logging
import math
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from utils.branching import Branching, PriorityOrder, majority_margin
from utils.errors import InvalidConfig, NonUniqueMax, PathBudgetExceeded, PreconditionUnmet
from utils.model import (
    Instance,
    Path,
    RankedEdge,
    RankSequence,
    VoterClass,
    VoterId,
    classify,
    paths_from,
    sequence_of,
)
from utils.sequence_orders import Comparison, SeqOrder, cmp

logger = logging.getLogger(__name__)

CANDIDATE_FACTOR = 100


@dataclass(frozen=True)
class OracleBudget:
    max_paths: int = 10**5
    max_branchings: int = 10**5

    def __post_init__(self):
        if self.max_paths <= 0 or self.max_branchings <= 0:
            raise InvalidConfig("Oracle budgets must be positive")


DEFAULT_BUDGET = OracleBudget()


def oracle_best_path(instance: Instance, v: VoterId, order: SeqOrder,
                     budget: OracleBudget = DEFAULT_BUDGET) -> Path:
    """
    The path whose sequence beats every other path of v under the order.

    Raises:
        PreconditionUnmet: v is isolated
        PathBudgetExceeded: v has more paths than the budget
        NonUniqueMax: no single sequence beats all others
    """
    paths = paths_from(instance, v, cap=budget.max_paths)
    if not paths:
        raise PreconditionUnmet(f"Voter {instance.name(v)} has no delegation path")
    sequences = [sequence_of(p) for p in paths]
    winners = [
        i for i, s in enumerate(sequences)
        if all(cmp(order, s, t) is Comparison.BETTER for j, t in enumerate(sequences) if j != i)
    ]
    if len(winners) != 1:
        raise NonUniqueMax(f"{order.name} has {len(winners)} maxima among the paths of {instance.name(v)}")
    return paths[winners[0]]


def oracle_best_sequence(instance: Instance, v: VoterId, order: SeqOrder,
                         budget: OracleBudget = DEFAULT_BUDGET) -> RankSequence:
    return sequence_of(oracle_best_path(instance, v, order, budget))


def _branching_options(instance: Instance) -> Tuple[List[VoterId], List[List[RankedEdge]]]:
    classes = classify(instance)
    voters = [v for v in instance.voters() if classes[v] is VoterClass.DELEGATING]
    options = [
        [e for e in instance.out_edges[v] if classes[e.target] is not VoterClass.ISOLATED]
        for v in voters
    ]
    return voters, options


def _acyclic(choice: Dict[VoterId, RankedEdge]) -> bool:
    done = set()
    for start in choice:
        trail = set()
        u = start
        while u in choice and u not in done:
            if u in trail:
                return False
            trail.add(u)
            u = choice[u].target
        done |= trail
    return True


def enumerate_branchings(instance: Instance, budget: OracleBudget = DEFAULT_BUDGET,
                         reverse: bool = False) -> List[Branching]:
    """
    Every C-branching: one edge per delegating voter (towards a non-isolated
    voter), cyclic choices discarded. ``reverse`` walks the voters in the
    opposite order, an independent recount of the same set.

    Raises:
        PathBudgetExceeded: too many candidates or branchings
    """
    voters, options = _branching_options(instance)
    candidates = math.prod(len(o) for o in options)
    if candidates > CANDIDATE_FACTOR * budget.max_branchings:
        raise PathBudgetExceeded(f"{candidates} edge choices exceed the branching budget")
    if reverse:
        voters, options = voters[::-1], options[::-1]

    found: List[Branching] = []
    for edges in itertools.product(*options):
        choice = dict(zip(voters, edges))
        if _acyclic(choice):
            found.append(Branching(choice))
            if len(found) > budget.max_branchings:
                raise PathBudgetExceeded(f"More than {budget.max_branchings} C-branchings")
    logger.debug(f"Enumerated {len(found)} C-branchings out of {candidates} edge choices")
    return found


def oracle_unpopularity(instance: Instance, branching: Branching,
                        budget: OracleBudget = DEFAULT_BUDGET) -> int:
    return max(majority_margin(instance, other, branching)
               for other in enumerate_branchings(instance, budget))


def brute_force_min_cost(instance: Instance, budget: OracleBudget = DEFAULT_BUDGET) -> int:
    """Minimum rank sum over all C-branchings."""
    return min(b.total_rank() for b in enumerate_branchings(instance, budget))


def brute_force_borda(instance: Instance, priority: Optional[PriorityOrder] = None,
                      budget: OracleBudget = DEFAULT_BUDGET) -> Branching:
    """
    Minimum rank sum first; among those, compare ranks voter by voter in
    priority order and keep the branching giving the first differing voter
    the smaller rank.
    """
    if priority is None:
        priority = PriorityOrder.identity(instance.n)
    branchings = enumerate_branchings(instance, budget)
    ranked = [v for v in priority.sequence if v in branchings[0].choice]
    return min(branchings, key=lambda b: (b.total_rank(), b.rank_vector(ranked)))


def _rank_matrix(branchings: Sequence[Branching]) -> np.ndarray:
    voters = branchings[0].voters()
    return np.array([b.rank_vector(voters) for b in branchings], dtype=np.int64).reshape(len(branchings), len(voters))


def popular_branchings(instance: Instance, budget: OracleBudget = DEFAULT_BUDGET) -> List[Branching]:
    """
    All popular C-branchings. Row i of the rank matrix beats row j for a
    voter when its rank is smaller; B_i is popular when no row has a
    positive margin against it.
    """
    branchings = enumerate_branchings(instance, budget)
    ranks = _rank_matrix(branchings)
    popular = []
    for i, branching in enumerate(branchings):
        margins = np.sign(ranks[i] - ranks).sum(axis=1)
        if margins.max() <= 0:
            popular.append(branching)
    return popular


def has_popular_branching(instance: Instance, budget: OracleBudget = DEFAULT_BUDGET) -> bool:
    return bool(popular_branchings(instance, budget))
