"""
Depth-first delegation: the sequence rule of the lexicographic order.

Each voter walks greedily along its lowest-ranked edge whose head can still
reach a casting voter without revisiting the walk. Voters are resolved
independently because their visited sets differ.
"""

import logging
from collections import deque
from typing import Dict, Optional, Set

from utils.model import Instance, Path, VoterId, delegating_voters
from utils.resolver.resolution import Resolution

logger = logging.getLogger(__name__)


def _reaches_casting(instance: Instance, start: VoterId, blocked: Set[VoterId]) -> bool:
    if instance.is_casting(start):
        return True
    seen = {start}
    queue = deque([start])
    while queue:
        u = queue.popleft()
        for e in instance.out_edges[u]:
            w = e.target
            if w in blocked or w in seen:
                continue
            if instance.is_casting(w):
                return True
            seen.add(w)
            queue.append(w)
    return False


def dfd_path(instance: Instance, v: VoterId) -> Optional[Path]:
    """
    The lexicographically best delegation path of v, or None if v is isolated.
    """
    if instance.is_casting(v) or not _reaches_casting(instance, v, set()):
        return None
    visited = {v}
    edges = []
    current = v
    while not instance.is_casting(current):
        for e in instance.out_edges[current]:
            if e.target not in visited and _reaches_casting(instance, e.target, visited):
                break
        else:
            # unreachable: current was entered only because it could reach a casting voter
            raise RuntimeError(f"Depth-first walk from {instance.name(v)} got stuck")
        edges.append(e)
        visited.add(e.target)
        current = e.target
    return Path(tuple(edges))


def resolve_dfd(instance: Instance, rule: str = "dfd") -> Resolution:
    paths: Dict[VoterId, Path] = {}
    for v in delegating_voters(instance):
        paths[v] = dfd_path(instance, v)
    logger.debug(f"Depth-first delegation resolved {len(paths)} voters")
    return Resolution(rule, paths)
