"""
Voter classification into casting, delegating and isolated voters, and the
reduced instance restricted to casting and delegating voters.
"""

import logging
from collections import deque
from enum import Enum
from typing import Dict, List

from utils.model.instance import Instance, RankedEdge, VoterId

logger = logging.getLogger(__name__)


class VoterClass(Enum):
    CASTING = "casting"
    DELEGATING = "delegating"
    ISOLATED = "isolated"


def classify(instance: Instance) -> Dict[VoterId, VoterClass]:
    """
    Classify every voter by reverse reachability from the casting voters.

    Args:
        instance: a valid instance

    Returns:
        Mapping voter id -> VoterClass
    """
    reaches = set(instance.casting)
    queue = deque(sorted(instance.casting))
    while queue:
        w = queue.popleft()
        for e in instance.in_edges[w]:
            if e.source not in reaches:
                reaches.add(e.source)
                queue.append(e.source)

    classes = {}
    for v in instance.voters():
        if v in instance.casting:
            classes[v] = VoterClass.CASTING
        elif v in reaches:
            classes[v] = VoterClass.DELEGATING
        else:
            classes[v] = VoterClass.ISOLATED
    return classes


def voters_of_class(instance: Instance, voter_class: VoterClass) -> List[VoterId]:
    """Ids of the given class in increasing order."""
    classes = classify(instance)
    return [v for v in instance.voters() if classes[v] is voter_class]


def delegating_voters(instance: Instance) -> List[VoterId]:
    return voters_of_class(instance, VoterClass.DELEGATING)


def isolated_voters(instance: Instance) -> List[VoterId]:
    return voters_of_class(instance, VoterClass.ISOLATED)


def reduce(instance: Instance) -> Instance:
    """
    Restrict the instance to casting and delegating voters.

    Surviving voters are renumbered densely in id order; names and edge ranks
    are kept verbatim, so ranks may have gaps. The origin map of the result
    points back to the ids of the unreduced instance.
    """
    classes = classify(instance)
    survivors = [v for v in instance.voters() if classes[v] is not VoterClass.ISOLATED]
    new_id = {old: new for new, old in enumerate(survivors)}

    out_edges = []
    for old in survivors:
        out_edges.append(tuple(
            RankedEdge(new_id[old], new_id[e.target], e.rank)
            for e in instance.out_edges[old]
            if e.target in new_id
        ))

    if instance.origin is None:
        origin = tuple(survivors)
    else:
        origin = tuple(instance.origin[old] for old in survivors)

    dropped = instance.n - len(survivors)
    if dropped:
        logger.debug(f"Reduced instance drops {dropped} isolated voters")
    return Instance(
        out_edges=tuple(out_edges),
        casting=frozenset(new_id[c] for c in instance.casting),
        names=tuple(instance.names[old] for old in survivors),
        origin=origin,
    )
