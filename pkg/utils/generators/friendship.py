"""
Friendship-based generation.

The base graph is undirected; the strength of a friendship {v, w} is the
number of common neighbours. Every non-casting voter ranks all its friends,
drawing the order by weighted sampling without replacement with weight
(1 + common neighbours)^alpha.
"""

import logging
from typing import Optional

import networkx as nx

from utils.generators.config import GenConfig
from utils.generators.rng import child_int_seed, stream_plan
from utils.generators.sampling import draw_casting, power_weights, weighted_order
from utils.model import Instance

logger = logging.getLogger(__name__)


def erdos_renyi_base(cfg: GenConfig, seed: int) -> nx.Graph:
    """G(n, p) with p = avg_degree / (n - 1), so the expected degree is avg_degree."""
    p = min(1.0, cfg.avg_degree / (cfg.n - 1)) if cfg.n > 1 else 0.0
    return nx.fast_gnp_random_graph(cfg.n, p, seed=seed)


def gen_friendship(cfg: GenConfig, base: Optional[nx.Graph] = None) -> Instance:
    """
    Args:
        cfg: generator parameters; n and avg_degree are unused with a base graph
        base: an undirected friendship graph; an Erdős–Rényi graph when absent

    Returns:
        The instance; voters without friends abstain
    """
    if base is None:
        plan = stream_plan(cfg.seed, cfg.n)
        graph = erdos_renyi_base(cfg, child_int_seed(plan.structure))
        nodes = list(range(cfg.n))
        names = None
    else:
        graph = nx.Graph(base)
        nodes = list(graph.nodes)
        names = [str(node) for node in nodes]
        plan = stream_plan(cfg.seed, len(nodes))

    index = {node: v for v, node in enumerate(nodes)}
    n = len(nodes)
    casting = draw_casting(plan, n, cfg.p_c)

    targets = []
    friendless = 0
    for v, node in enumerate(nodes):
        friends = sorted(graph.neighbors(node), key=index.__getitem__)
        if casting[v] or not friends:
            friendless += int(not casting[v])
            targets.append([])
            continue
        strength = [len(list(nx.common_neighbors(graph, node, w))) for w in friends]
        order = weighted_order(plan.voters[v], [index[w] for w in friends],
                               power_weights(strength, cfg.alpha))
        targets.append(order)

    if friendless:
        logger.warning(f"{friendless} non-casting voters have no friends in the base graph and abstain")
    instance = Instance.from_targets(targets, [v for v in range(n) if casting[v]], names)
    logger.debug(f"Friendship instance: {n} voters, {instance.edge_count} edges")
    return instance
