"""
The diffusion process.

A holds the voters with a path. In every round, x is the smallest rank on
an edge from outside A into A, and every voter with an edge of rank x into A
joins A at once, its path being that edge followed by the head's path.
"""

import heapq
import logging
from typing import Dict, List, Tuple

from utils.model import Instance, Path, RankedEdge, VoterId
from utils.resolver.resolution import Resolution

logger = logging.getLogger(__name__)


def resolve_diffusion_process(instance: Instance, rule: str = "diffusion") -> Resolution:
    paths: Dict[VoterId, Path] = {c: Path() for c in instance.casting}
    boundary: List[Tuple[int, VoterId, VoterId, RankedEdge]] = []

    def open_edges_into(w: VoterId) -> None:
        for e in instance.in_edges[w]:
            if e.source not in paths:
                heapq.heappush(boundary, (e.rank, e.source, e.target, e))

    for c in sorted(instance.casting):
        open_edges_into(c)

    rounds = 0
    while boundary:
        x = boundary[0][0]
        selected = []
        while boundary and boundary[0][0] == x:
            _, v, _, edge = heapq.heappop(boundary)
            if v not in paths:
                selected.append(edge)
        if not selected:
            continue
        rounds += 1
        # heads were settled before this round; tails are distinct since ranks are per voter
        for edge in selected:
            paths[edge.source] = paths[edge.target].prepend(edge)
        for edge in selected:
            open_edges_into(edge.source)

    logger.debug(f"Diffusion settled {len(paths) - len(instance.casting)} voters in {rounds} rounds")
    delegating = {v: p for v, p in paths.items() if not instance.is_casting(v)}
    return Resolution(rule, delegating)
