"""
C-branchings and priority orders.
"""

from dataclasses import dataclass
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from utils.errors import InvalidInstance
from utils.model import Instance, RankedEdge, VoterClass, VoterId, classify


@dataclass(frozen=True)
class Branching:
    """
    One outgoing edge per delegating voter, acyclic, every walk ending at a
    casting voter. Keys are voter ids of the (unreduced) instance.
    """
    choice: Dict[VoterId, RankedEdge]

    def voters(self) -> List[VoterId]:
        return sorted(self.choice)

    def edges(self) -> List[RankedEdge]:
        return [self.choice[v] for v in self.voters()]

    def rank_of(self, v: VoterId) -> int:
        return self.choice[v].rank

    def total_rank(self) -> int:
        return sum(e.rank for e in self.choice.values())

    def rank_vector(self, order: Sequence[VoterId]) -> Tuple[int, ...]:
        return tuple(self.choice[v].rank for v in order)

    def signature(self) -> Tuple[Tuple[VoterId, VoterId], ...]:
        return tuple((v, self.choice[v].target) for v in self.voters())


def branching_errors(instance: Instance, choice: Dict[VoterId, RankedEdge]) -> Optional[str]:
    """
    Describe why the choice is not a C-branching of the instance, or None if it is.
    """
    classes = classify(instance)
    delegating = {v for v, cls in classes.items() if cls is VoterClass.DELEGATING}
    if set(choice) != delegating:
        return "choice does not cover exactly the delegating voters"
    for v, e in choice.items():
        if e.source != v or instance.rank_table.get((v, e.target)) != e.rank:
            return f"edge {e} is not an edge of voter {instance.name(v)}"
        if classes[e.target] is VoterClass.ISOLATED:
            return f"edge {e} leads to an isolated voter"
    state: Dict[VoterId, int] = {}
    for start in choice:
        u = start
        trail = []
        while u in choice and u not in state:
            state[u] = 1
            trail.append(u)
            u = choice[u].target
        if state.get(u) == 1:
            return f"cycle through voter {instance.name(u)}"
        for w in trail:
            state[w] = 2
    return None


def is_branching(instance: Instance, choice: Dict[VoterId, RankedEdge]) -> bool:
    return branching_errors(instance, choice) is None


@dataclass(frozen=True)
class PriorityOrder:
    """
    The bijection pi, stored as the voter ids in increasing pi.
    """
    sequence: Tuple[VoterId, ...]

    def __post_init__(self):
        if sorted(self.sequence) != list(range(len(self.sequence))):
            raise InvalidInstance("Priority order must list every voter exactly once")

    @classmethod
    def identity(cls, n: int) -> "PriorityOrder":
        return cls(tuple(range(n)))

    @classmethod
    def from_names(cls, instance: Instance, names: Iterable[str]) -> "PriorityOrder":
        """Listed voters first, in the given order; the rest follow by id."""
        head = [instance.id_of(name) for name in names]
        listed = set(head)
        if len(listed) != len(head):
            raise InvalidInstance("Priority order lists a voter twice")
        return cls(tuple(head) + tuple(v for v in instance.voters() if v not in listed))

    def pi(self, v: VoterId) -> int:
        return self.sequence.index(v) + 1

    def extended_to(self, n: int) -> "PriorityOrder":
        """Append voters added after the order was fixed."""
        return PriorityOrder(self.sequence + tuple(range(len(self.sequence), n)))
