"""
Ranked delegation instances.

Voters are dense integer ids 0..n-1 with a parallel name table. Each voter
holds its outgoing edges ordered by rank; casting voters hold none.
"""

import logging
from dataclasses import dataclass
from functools import cached_property
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple

from utils.errors import InvalidInstance

logger = logging.getLogger(__name__)

VoterId = int


@dataclass(frozen=True)
class RankedEdge:
    source: VoterId
    target: VoterId
    rank: int

    def __post_init__(self):
        if self.source == self.target:
            raise InvalidInstance(f"Self-delegation on voter {self.source}")
        if self.rank < 1:
            raise InvalidInstance(f"Edge {self.source}->{self.target} has rank {self.rank} < 1")


@dataclass(frozen=True)
class Instance:
    """
    A ranked delegation instance (G, r).

    Attributes:
        out_edges: per voter, its outgoing edges in increasing rank order
        casting: ids of the declared casting voters
        names: display name per voter id
        origin: for reduced instances, the original id of every voter; None otherwise
    """
    out_edges: Tuple[Tuple[RankedEdge, ...], ...]
    casting: FrozenSet[VoterId]
    names: Tuple[str, ...]
    origin: Optional[Tuple[VoterId, ...]] = None

    def __post_init__(self):
        n = len(self.out_edges)
        if len(self.names) != n:
            raise InvalidInstance(f"Name table has {len(self.names)} entries for {n} voters")
        if len(set(self.names)) != n:
            raise InvalidInstance("Voter names must be unique")
        if self.origin is not None and len(self.origin) != n:
            raise InvalidInstance("Origin map does not cover every voter")
        for c in self.casting:
            if not 0 <= c < n:
                raise InvalidInstance(f"Casting voter id {c} out of range")
            if self.out_edges[c]:
                raise InvalidInstance(f"Casting voter {self.names[c]} has outgoing edges")

        for v, edges in enumerate(self.out_edges):
            seen = set()
            previous_rank = 0
            for e in edges:
                if e.source != v:
                    raise InvalidInstance(f"Edge {e} listed under voter {v}")
                if not 0 <= e.target < n:
                    raise InvalidInstance(f"Edge target {e.target} out of range")
                if e.target in seen:
                    raise InvalidInstance(f"Voter {self.names[v]} lists {self.names[e.target]} twice")
                if e.rank <= previous_rank:
                    raise InvalidInstance(f"Ranks of voter {self.names[v]} are not strictly increasing")
                seen.add(e.target)
                previous_rank = e.rank
            # reduced instances keep the original, possibly gappy ranks
            if self.origin is None and [e.rank for e in edges] != list(range(1, len(edges) + 1)):
                raise InvalidInstance(f"Ranks of voter {self.names[v]} are not 1..{len(edges)}")

    @classmethod
    def from_targets(
        cls,
        targets: Sequence[Sequence[VoterId]],
        casting: Iterable[VoterId],
        names: Optional[Sequence[str]] = None,
    ) -> "Instance":
        """
        Build an instance from per-voter target lists; list position i gets rank i+1.
        """
        out_edges = tuple(
            tuple(RankedEdge(v, w, i + 1) for i, w in enumerate(ts))
            for v, ts in enumerate(targets)
        )
        if names is None:
            names = [str(v) for v in range(len(targets))]
        return cls(out_edges=out_edges, casting=frozenset(casting), names=tuple(names))

    @property
    def n(self) -> int:
        return len(self.out_edges)

    @property
    def is_reduced(self) -> bool:
        return self.origin is not None

    @property
    def edge_count(self) -> int:
        return sum(len(edges) for edges in self.out_edges)

    def voters(self) -> range:
        return range(self.n)

    def is_casting(self, v: VoterId) -> bool:
        return v in self.casting

    def edges(self) -> List[RankedEdge]:
        return [e for edges in self.out_edges for e in edges]

    def targets(self, v: VoterId) -> List[VoterId]:
        return [e.target for e in self.out_edges[v]]

    def name(self, v: VoterId) -> str:
        return self.names[v]

    @cached_property
    def ids_by_name(self) -> Dict[str, VoterId]:
        return {name: v for v, name in enumerate(self.names)}

    def id_of(self, name: str) -> VoterId:
        try:
            return self.ids_by_name[name]
        except KeyError:
            raise InvalidInstance(f"Unknown voter '{name}'") from None

    @cached_property
    def rank_table(self) -> Dict[Tuple[VoterId, VoterId], int]:
        return {(e.source, e.target): e.rank for e in self.edges()}

    def rank(self, v: VoterId, w: VoterId) -> int:
        return self.rank_table[(v, w)]

    @cached_property
    def in_edges(self) -> Tuple[Tuple[RankedEdge, ...], ...]:
        incoming: List[List[RankedEdge]] = [[] for _ in range(self.n)]
        for e in self.edges():
            incoming[e.target].append(e)
        return tuple(tuple(es) for es in incoming)

    def with_out_edges(self, v: VoterId, targets: Sequence[VoterId]) -> "Instance":
        """
        Replace v's ranked list (ranks renumbered 1..k). v must not be casting.
        """
        if self.is_reduced:
            raise InvalidInstance("Edits are only defined on original instances")
        if v in self.casting:
            raise InvalidInstance(f"Casting voter {self.names[v]} cannot delegate")
        out_edges = list(self.out_edges)
        out_edges[v] = tuple(RankedEdge(v, w, i + 1) for i, w in enumerate(targets))
        return Instance(tuple(out_edges), self.casting, self.names)

    def without_out_edges(self, v: VoterId) -> "Instance":
        """The instance G' in which v abstains from delegating."""
        return self.with_out_edges(v, [])

    def promote_to_casting(self, v: VoterId) -> "Instance":
        """Turn v into a casting voter, deleting its outgoing edges."""
        out_edges = list(self.out_edges)
        out_edges[v] = ()
        return Instance(tuple(out_edges), self.casting | {v}, self.names, self.origin)

    def add_isolated_casting(self, name: Optional[str] = None) -> "Instance":
        """Append one fresh casting voter without edges; existing ids are unchanged."""
        if name is None:
            name = f"fresh{self.n}"
            while name in self.ids_by_name:
                name = f"_{name}"
        new_id = self.n
        return Instance(
            self.out_edges + ((),),
            self.casting | {new_id},
            self.names + (name,),
            None if self.origin is None else self.origin + (-1,),
        )

    def truncated(self, d: int) -> "Instance":
        """Keep only edges with rank <= d."""
        if d < 0:
            raise InvalidInstance(f"Outdegree cap must be non-negative, got {d}")
        out_edges = tuple(tuple(e for e in edges if e.rank <= d) for edges in self.out_edges)
        return Instance(out_edges, self.casting, self.names, self.origin)
