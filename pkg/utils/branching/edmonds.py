"""
Optimum C-branchings through Edmonds' algorithm.

A C-branching on the voters C ∪ D becomes a spanning arborescence once every
delegation edge v -> w is reversed to w -> v and a super-root feeds every
casting voter. networkx solves the arborescence problem; rational weights
are scaled to integers first so the optimum is exact, and a large constant
shift makes every maximum branching span all voters.
"""

import logging
import math
from fractions import Fraction
from typing import Callable, Dict, Mapping, Optional, Union

import networkx as nx

from utils.branching.structures import Branching, PriorityOrder
from utils.errors import Infeasible
from utils.model import Instance, RankedEdge, VoterClass, VoterId, classify

logger = logging.getLogger(__name__)

SUPER_ROOT = -1

EdgeWeights = Union[Mapping[RankedEdge, Fraction], Callable[[RankedEdge], Fraction]]


def _weight_function(weights: EdgeWeights) -> Callable[[RankedEdge], Fraction]:
    if isinstance(weights, Mapping):
        return weights.__getitem__
    return weights


def optimum_branching(
    instance: Instance,
    weights: EdgeWeights,
    maximize: bool,
    fixed: Optional[Dict[VoterId, RankedEdge]] = None,
) -> Branching:
    """
    A C-branching of maximum (or minimum) total weight.

    Args:
        instance: the instance; isolated voters are ignored
        weights: rational weight per edge; negative values are allowed
        maximize: maximize the total weight if True, minimize otherwise
        fixed: voters whose edge is forced

    Returns:
        An optimal Branching (no tie-breaking among optima)

    Raises:
        Infeasible: no C-branching respects the fixed edges
    """
    weight_of = _weight_function(weights)
    fixed = fixed or {}
    classes = classify(instance)
    delegating = [v for v in instance.voters() if classes[v] is VoterClass.DELEGATING]

    candidates = []
    for v in delegating:
        edges = [fixed[v]] if v in fixed else instance.out_edges[v]
        for e in edges:
            if classes[e.target] is not VoterClass.ISOLATED:
                w = Fraction(weight_of(e))
                candidates.append((e, w if maximize else -w))

    scale = math.lcm(*(w.denominator for _, w in candidates)) if candidates else 1
    scaled = [(e, int(w * scale)) for e, w in candidates]
    spread = max((abs(w) for _, w in scaled), default=0)
    # any branching with one more edge outweighs every difference in weight
    shift = 2 * spread * (len(delegating) + 1) + 1

    graph = nx.DiGraph()
    graph.add_node(SUPER_ROOT)
    for c in instance.casting:
        graph.add_edge(SUPER_ROOT, c, weight=shift)
    for e, w in scaled:
        graph.add_edge(e.target, e.source, weight=w + shift)

    try:
        arborescence = nx.maximum_branching(graph, attr="weight")
    except nx.NetworkXException as exc:
        raise Infeasible(f"Edmonds' algorithm failed: {exc}") from exc

    choice: Dict[VoterId, RankedEdge] = {}
    for head, tail in arborescence.edges():
        if head != SUPER_ROOT:
            choice[tail] = RankedEdge(tail, head, instance.rank(tail, head))

    if len(choice) != len(delegating):
        missing = [instance.name(v) for v in delegating if v not in choice]
        raise Infeasible(f"No C-branching covers voters {missing}")
    return Branching(choice)


def branching_weight(branching: Branching, weights: EdgeWeights) -> Fraction:
    weight_of = _weight_function(weights)
    return sum((Fraction(weight_of(e)) for e in branching.edges()), Fraction(0))


def min_cost_branching(
    instance: Instance,
    cost: EdgeWeights,
    priority: Optional[PriorityOrder] = None,
) -> Branching:
    """
    A minimum-cost C-branching; ties among optimal branchings are settled by
    the priority order (identity by default).

    Following the priority order, every voter in turn is fixed to the
    lowest-ranked edge that still admits an optimal branching consistent with
    the voters fixed before it. Each attempt is one constrained Edmonds call.
    """
    if priority is None:
        priority = PriorityOrder.identity(instance.n)
    best = optimum_branching(instance, cost, maximize=False)
    optimum = branching_weight(best, cost)

    fixed: Dict[VoterId, RankedEdge] = {}
    probes = 0
    for v in priority.sequence:
        if v not in best.choice:
            continue
        current = best.choice[v]
        for e in instance.out_edges[v]:
            if e.rank >= current.rank:
                break
            probes += 1
            try:
                probe = optimum_branching(instance, cost, maximize=False, fixed={**fixed, v: e})
            except Infeasible:
                continue
            if branching_weight(probe, cost) == optimum:
                best = probe
                break
        fixed[v] = best.choice[v]

    logger.debug(f"Min-cost branching of cost {optimum} after {probes} priority probes")
    return best
