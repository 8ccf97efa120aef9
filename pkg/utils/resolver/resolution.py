"""
Resolutions: the delegation path chosen for every delegating voter.
"""

from dataclasses import dataclass, field
from typing import Dict, Set

from utils.errors import Infeasible
from utils.model import Instance, Path, RankedEdge, RankSequence, VoterId, sequence_of


@dataclass(frozen=True)
class Resolution:
    """
    Output of a delegation rule on one instance.

    Attributes:
        rule: name of the rule that produced it
        paths: delegating voter id -> chosen path (ends at a casting voter)
    """
    rule: str
    paths: Dict[VoterId, Path] = field(default_factory=dict)

    def voters(self):
        return sorted(self.paths)

    def guru(self, v: VoterId) -> VoterId:
        return self.paths[v].guru

    def sequence(self, v: VoterId) -> RankSequence:
        return sequence_of(self.paths[v])

    def first_edges(self) -> Dict[VoterId, RankedEdge]:
        """Edge set {first edge of each path}; a C-branching when the resolution is confluent."""
        return {v: path.first_edge for v, path in self.paths.items()}

    def describe_path(self, instance: Instance, v: VoterId) -> str:
        names = ' -> '.join(instance.name(u) for u in self.paths[v].voters())
        ranks = ','.join(str(r) for r in self.sequence(v))
        return f"{instance.name(v)}: {names} [seq: ({ranks})]"


def is_confluent_output(res: Resolution) -> bool:
    """
    True iff in the union of all chosen paths every delegating voter has
    exactly one outgoing edge.
    """
    used: Dict[VoterId, Set[VoterId]] = {}
    for path in res.paths.values():
        for e in path.edges:
            used.setdefault(e.source, set()).add(e.target)
    return all(len(used.get(v, ())) == 1 for v in res.paths)


def resolution_from_choices(instance: Instance, rule: str,
                            choice: Dict[VoterId, RankedEdge]) -> Resolution:
    """
    Follow a C-branching from every voter it covers to obtain the paths.
    """
    paths: Dict[VoterId, Path] = {}

    def path_of(v: VoterId) -> Path:
        trail = []
        seen = set()
        u = v
        while u not in paths and not instance.is_casting(u):
            if u in seen:
                raise Infeasible(f"Edge choice cycles through voter {instance.name(u)}")
            seen.add(u)
            trail.append(choice[u])
            u = choice[u].target
        tail = paths.get(u, Path())
        for e in reversed(trail):
            tail = tail.prepend(e)
            paths[e.source] = tail
        return paths[v]

    for v in sorted(choice):
        path_of(v)
    return Resolution(rule, paths)
