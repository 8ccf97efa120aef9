"""
Independence of isolated casting voters: adding a casting voter nobody can
reach must not change any chosen path.
"""

from typing import Optional

from utils.axioms.report import Violation
from utils.branching import PriorityOrder
from utils.model import Instance
from utils.resolver import DelegationRule


def check_iic(rule: DelegationRule, instance: Instance,
              priority: Optional[PriorityOrder] = None) -> Optional[Violation]:
    res = rule.resolve(instance, priority)
    extended = instance.add_isolated_casting()
    res_extended = rule.resolve(extended, priority)
    if set(res.paths) != set(res_extended.paths):
        return Violation(instance, None, "the set of delegating voters changed")
    for v in res.voters():
        if res.paths[v] != res_extended.paths[v]:
            detail = (f"path of {instance.name(v)} changed from {res.describe_path(instance, v)} "
                      f"to {res_extended.describe_path(extended, v)}")
            return Violation(instance, v, detail)
    return None
