"""
Copy-robustness: a voter delegating directly to its guru c turns into a
casting voter. The joint weight of the two must not change.
"""

import logging
from typing import List, Optional

from utils.axioms.report import Violation
from utils.axioms.voting_weight import weights
from utils.branching import PriorityOrder
from utils.errors import PreconditionUnmet
from utils.model import Instance, VoterId
from utils.resolver import DelegationRule, Resolution

logger = logging.getLogger(__name__)


def copy_eligible_voters(res: Resolution) -> List[VoterId]:
    """Delegating voters whose chosen path is a single edge."""
    return [v for v in res.voters() if len(res.paths[v]) == 1]


def check_copy_robustness(rule: DelegationRule, instance: Instance, v: VoterId,
                          priority: Optional[PriorityOrder] = None) -> Optional[Violation]:
    """
    Raises:
        PreconditionUnmet: v does not delegate directly to a casting voter
    """
    res = rule.resolve(instance, priority)
    if v not in res.paths or len(res.paths[v]) != 1:
        raise PreconditionUnmet(f"Voter {instance.name(v)} does not delegate directly to a casting voter")
    guru = res.guru(v)
    promoted = instance.promote_to_casting(v)
    before = weights(instance, res)
    after = weights(promoted, rule.resolve(promoted, priority))
    joint = after[guru] + after[v]
    if before[guru] == joint:
        return None
    detail = (f"{instance.name(guru)} holds {before[guru]} before; after {instance.name(v)} "
              f"casts, {instance.name(guru)} + {instance.name(v)} = {after[guru]} + {after[v]} = {joint}")
    logger.debug(detail)
    return Violation(instance, v, detail)
