"""
Delegation paths and their rank sequences.
"""

import logging
from dataclasses import dataclass
from typing import List, Tuple

from utils.errors import InvalidInstance, PathBudgetExceeded
from utils.model.instance import Instance, RankedEdge, VoterId

logger = logging.getLogger(__name__)

RankSequence = Tuple[int, ...]

DEFAULT_PATH_CAP = 10 ** 6


@dataclass(frozen=True)
class Path:
    edges: Tuple[RankedEdge, ...] = ()

    def __post_init__(self):
        visited = set()
        for i, e in enumerate(self.edges):
            if i and self.edges[i - 1].target != e.source:
                raise InvalidInstance(f"Path edges do not chain at position {i}")
            visited.add(e.source)
            if e.target in visited:
                raise InvalidInstance(f"Path revisits voter {e.target}")

    def __len__(self) -> int:
        return len(self.edges)

    @property
    def start(self) -> VoterId:
        return self.edges[0].source

    @property
    def guru(self) -> VoterId:
        return self.edges[-1].target

    @property
    def first_edge(self) -> RankedEdge:
        return self.edges[0]

    def voters(self) -> List[VoterId]:
        if not self.edges:
            return []
        return [self.edges[0].source] + [e.target for e in self.edges]

    def prepend(self, edge: RankedEdge) -> "Path":
        return Path((edge,) + self.edges)


def sequence_of(path: Path) -> RankSequence:
    """Ranks along the path, in path order."""
    return tuple(e.rank for e in path.edges)


def paths_from(instance: Instance, v: VoterId, cap: int = DEFAULT_PATH_CAP) -> List[Path]:
    """
    Enumerate every simple path from v that ends at a casting voter.

    Args:
        instance: the instance
        v: a non-casting voter
        cap: maximum number of paths before giving up

    Returns:
        The paths in depth-first order over ranks; empty iff v is isolated

    Raises:
        InvalidInstance: v is a casting voter
        PathBudgetExceeded: more than cap paths exist
    """
    if instance.is_casting(v):
        raise InvalidInstance(f"Paths are only enumerated for non-casting voters, got {instance.name(v)}")

    found: List[Path] = []
    on_path = {v}
    prefix: List[RankedEdge] = []

    def extend(u: VoterId) -> None:
        for e in instance.out_edges[u]:
            w = e.target
            if w in on_path:
                continue
            prefix.append(e)
            if instance.is_casting(w):
                found.append(Path(tuple(prefix)))
                if len(found) > cap:
                    raise PathBudgetExceeded(
                        f"More than {cap} paths from voter {instance.name(v)}")
            else:
                on_path.add(w)
                extend(w)
                on_path.remove(w)
            prefix.pop()

    extend(v)
    return found
