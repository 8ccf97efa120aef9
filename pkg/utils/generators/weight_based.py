"""
Weight-based generation: edges are ranked by decreasing trust weight, ties
in random order. The synthetic variant places voters in the plane and uses
closeness as trust: each voter ranks its nearest neighbours.
"""

import logging
from typing import Optional

import networkx as nx
import numpy as np

from utils.errors import InsufficientNeighbors
from utils.generators.config import GenConfig, Spatial
from utils.generators.rng import stream_plan
from utils.generators.sampling import draw_casting, shuffled_ties_order
from utils.model import Instance

logger = logging.getLogger(__name__)


def sample_points(cfg: GenConfig, rng: np.random.Generator) -> np.ndarray:
    if cfg.spatial is Spatial.GAUSSIAN_2D:
        return rng.normal(size=(cfg.n, 2))
    return rng.random((cfg.n, 2))


def gen_weight_based(cfg: GenConfig, base: Optional[nx.DiGraph] = None) -> Instance:
    """
    Raises:
        InsufficientNeighbors: synthetic variant with fewer than avg_degree other voters
    """
    if base is not None:
        return _from_weighted_base(cfg, base)

    k = cfg.neighbours
    if cfg.n - 1 < k:
        raise InsufficientNeighbors(f"{cfg.n} voters cannot each have {k} nearest neighbours")
    plan = stream_plan(cfg.seed, cfg.n)
    points = sample_points(cfg, plan.structure)
    casting = draw_casting(plan, cfg.n, cfg.p_c)

    targets = []
    for v in range(cfg.n):
        if casting[v]:
            targets.append([])
            continue
        distance = np.linalg.norm(points - points[v], axis=1)
        distance[v] = np.inf
        nearest = shuffled_ties_order(plan.voters[v], distance)[:k]
        targets.append([int(w) for w in nearest])

    instance = Instance.from_targets(targets, np.flatnonzero(casting).tolist())
    logger.debug(f"Spatial instance ({cfg.spatial.value}): {cfg.n} voters, {instance.edge_count} edges")
    return instance


def _from_weighted_base(cfg: GenConfig, base: nx.DiGraph) -> Instance:
    """Keep positive-weight edges only; rank them by decreasing weight."""
    nodes = list(base.nodes)
    index = {node: v for v, node in enumerate(nodes)}
    plan = stream_plan(cfg.seed, len(nodes))
    casting = draw_casting(plan, len(nodes), cfg.p_c)

    targets = []
    for v, node in enumerate(nodes):
        if casting[v]:
            targets.append([])
            continue
        trusted = [(index[w], float(data.get("weight", 1.0)))
                   for w, data in base[node].items() if w != node]
        trusted = sorted((w, weight) for w, weight in trusted if weight > 0)
        if not trusted:
            targets.append([])
            continue
        order = shuffled_ties_order(plan.voters[v], -np.array([weight for _, weight in trusted]))
        targets.append([trusted[i][0] for i in order])

    instance = Instance.from_targets(targets, np.flatnonzero(casting).tolist(),
                                     [str(node) for node in nodes])
    logger.debug(f"Weight-based instance from base: {instance.n} voters, {instance.edge_count} edges")
    return instance
