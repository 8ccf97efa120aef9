"""
Prominence-based generation: voters delegate preferably to voters many
others already delegate to.
"""

import logging
from typing import List, Optional

import networkx as nx
import numpy as np

from utils.generators.config import GenConfig
from utils.generators.rng import stream_plan
from utils.generators.sampling import draw_casting, power_weights, weighted_order
from utils.model import Instance

logger = logging.getLogger(__name__)


def _grow_synthetic(cfg: GenConfig, casting: np.ndarray, rng: np.random.Generator) -> List[List[int]]:
    """
    Start from the empty graph over a complete directed base. Repeatedly pick
    a non-casting voter uniformly at random and give it one more outgoing
    edge to x with probability proportional to (1 + current indegree of x)^beta.
    Stops after round(avg_degree * |V \\ C|) edges.
    """
    n = cfg.n
    targets: List[List[int]] = [[] for _ in range(n)]
    delegators = [v for v in range(n) if not casting[v]]
    open_voters = [v for v in delegators if n > 1]
    indegree = np.zeros(n, dtype=np.int64)

    goal = int(round(cfg.avg_degree * len(delegators)))
    capacity = len(delegators) * (n - 1)
    if goal > capacity:
        logger.warning(f"Edge goal {goal} exceeds the {capacity} possible edges; stopping at {capacity}")
        goal = capacity

    added = 0
    while added < goal:
        slot = int(rng.integers(len(open_voters)))
        v = open_voters[slot]
        available = np.ones(n, dtype=bool)
        available[v] = False
        available[targets[v]] = False
        candidates = np.flatnonzero(available)
        weights = power_weights(indegree[candidates], cfg.beta)
        x = int(rng.choice(candidates, p=weights / weights.sum()))
        targets[v].append(x)
        indegree[x] += 1
        added += 1
        if len(targets[v]) == n - 1:
            open_voters.pop(slot)
    return targets


def gen_prominence(cfg: GenConfig, base: Optional[nx.DiGraph] = None) -> Instance:
    """
    Without a base graph, grow the delegation graph synthetically (see
    _grow_synthetic). With a directed base graph, every non-casting voter
    ranks all its out-neighbours by weighted sampling without replacement
    with weight (1 + base indegree)^beta.
    """
    if base is None:
        plan = stream_plan(cfg.seed, cfg.n)
        casting = draw_casting(plan, cfg.n, cfg.p_c)
        targets = _grow_synthetic(cfg, casting, plan.structure)
        instance = Instance.from_targets(targets, np.flatnonzero(casting).tolist())
        logger.debug(f"Synthetic prominence instance: {cfg.n} voters, {instance.edge_count} edges")
        return instance

    nodes = list(base.nodes)
    index = {node: v for v, node in enumerate(nodes)}
    plan = stream_plan(cfg.seed, len(nodes))
    casting = draw_casting(plan, len(nodes), cfg.p_c)
    targets = []
    for v, node in enumerate(nodes):
        if casting[v]:
            targets.append([])
            continue
        followed = sorted((w for w in base.successors(node) if w != node), key=index.__getitem__)
        weights = power_weights([base.in_degree(w) for w in followed], cfg.beta) if followed else None
        targets.append(weighted_order(plan.voters[v], [index[w] for w in followed], weights))
    instance = Instance.from_targets(targets, np.flatnonzero(casting).tolist(),
                                     [str(node) for node in nodes])
    logger.debug(f"Prominence instance from base: {instance.n} voters, {instance.edge_count} edges")
    return instance
