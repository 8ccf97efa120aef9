"""
Settle engine for confluent sequence orders.

Starting from the casting voters (labelled with the empty sequence), the
engine repeatedly settles the unsettled voter whose best candidate
(rank of its edge, label of the edge's head) is best under the order. This
is the diffusion loop with "minimum rank" replaced by "best candidate
sequence"; it is exact for orders satisfying prefix-extension invariance
and suffix dominance.
"""

import heapq
import logging
from typing import Dict, List, Optional, Tuple

from utils.errors import NotConfluentOrder
from utils.model import Instance, Path, RankedEdge, RankSequence, VoterId
from utils.resolver.resolution import Resolution
from utils.sequence_orders import OrderKind, SeqOrder

logger = logging.getLogger(__name__)


def _check_order(order: SeqOrder) -> None:
    if order.kind is OrderKind.LEX:
        raise NotConfluentOrder("The lexicographic order is not confluent; use depth-first delegation")
    if order.kind is OrderKind.WEIGHTED_SUM and not order.weights.strictly_positive:
        raise NotConfluentOrder(f"Weighted sum {order.name} needs w(1) > 0 to be confluent")


def resolve_confluent(instance: Instance, order: SeqOrder, rule: Optional[str] = None) -> Resolution:
    """
    Give every delegating voter its best path under a confluent order.

    Args:
        instance: the instance to resolve
        order: any order except the lexicographic one
        rule: name recorded on the resolution (defaults to the order name)

    Returns:
        Resolution covering exactly the delegating voters

    Raises:
        NotConfluentOrder: order is lexicographic or a weighted sum with w(1) = 0
    """
    _check_order(order)

    labels: Dict[VoterId, RankSequence] = {}
    paths: Dict[VoterId, Path] = {}
    # (key, voter, target, edge); voter then target break ties between equal sequences
    heap: List[Tuple[object, VoterId, VoterId, RankedEdge]] = []

    def offer_in_edges(w: VoterId) -> None:
        for e in instance.in_edges[w]:
            if e.source in labels:
                continue
            candidate = (e.rank,) + labels[w]
            heapq.heappush(heap, (order.sort_key(candidate), e.source, w, e))

    for c in sorted(instance.casting):
        labels[c] = ()
        paths[c] = Path()
    for c in sorted(instance.casting):
        offer_in_edges(c)

    while heap:
        _, v, w, edge = heapq.heappop(heap)
        if v in labels:
            continue
        labels[v] = (edge.rank,) + labels[w]
        paths[v] = paths[w].prepend(edge)
        offer_in_edges(v)

    delegating = {v: p for v, p in paths.items() if not instance.is_casting(v)}
    logger.debug(f"Settled {len(delegating)} delegating voters under {order.name}")
    return Resolution(rule or order.name, delegating)
