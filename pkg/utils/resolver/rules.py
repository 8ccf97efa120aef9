"""
Rule registry: named delegation rules and their resolution entry point.
"""

import logging
from dataclasses import dataclass
from enum import Enum
from typing import List, Optional

from utils.branching import PriorityOrder, borda_branching
from utils.errors import InvalidConfig
from utils.model import Instance
from utils.resolver.depth_first import resolve_dfd
from utils.resolver.diffusion_process import resolve_diffusion_process
from utils.resolver.resolution import Resolution, resolution_from_choices
from utils.resolver.settle import resolve_confluent
from utils.sequence_orders import BFD, DIFF, LEX, LEXIMAX, MINSUM, SeqOrder, WeightTable, weighted

logger = logging.getLogger(__name__)


class RuleKind(Enum):
    DFD = "dfd"
    BFD = "bfd"
    MINSUM = "minsum"
    LEXIMAX = "leximax"
    DIFFUSION = "diffusion"
    BORDA = "borda"
    WEIGHTED_SUM = "wsum"


@dataclass(frozen=True)
class DelegationRule:
    """
    A delegation rule. Sequence rules carry the order they maximize; the
    Borda rule is defined on branchings and has none.
    """
    kind: RuleKind
    order: Optional[SeqOrder] = None

    @property
    def name(self) -> str:
        if self.kind is RuleKind.WEIGHTED_SUM:
            return self.order.name
        return self.kind.value

    @property
    def confluent(self) -> bool:
        return self.kind is not RuleKind.DFD

    @property
    def is_sequence_rule(self) -> bool:
        return self.order is not None

    def resolve(self, instance: Instance, priority: Optional[PriorityOrder] = None) -> Resolution:
        if self.kind is RuleKind.DFD:
            return resolve_dfd(instance, self.name)
        if self.kind is RuleKind.DIFFUSION:
            return resolve_diffusion_process(instance, self.name)
        if self.kind is RuleKind.BORDA:
            if priority is not None and len(priority.sequence) < instance.n:
                priority = priority.extended_to(instance.n)
            branching = borda_branching(instance, priority)
            return resolution_from_choices(instance, self.name, branching.choice)
        return resolve_confluent(instance, self.order, self.name)

    def __str__(self) -> str:
        return self.name


DFD_RULE = DelegationRule(RuleKind.DFD, LEX)
BFD_RULE = DelegationRule(RuleKind.BFD, BFD)
MINSUM_RULE = DelegationRule(RuleKind.MINSUM, MINSUM)
LEXIMAX_RULE = DelegationRule(RuleKind.LEXIMAX, LEXIMAX)
DIFFUSION_RULE = DelegationRule(RuleKind.DIFFUSION, DIFF)
BORDA_RULE = DelegationRule(RuleKind.BORDA)

SHIPPED_RULES = (DFD_RULE, BFD_RULE, MINSUM_RULE, LEXIMAX_RULE, DIFFUSION_RULE, BORDA_RULE)
CONFLUENT_RULES = tuple(rule for rule in SHIPPED_RULES if rule.confluent)


def parse_rule(text: str) -> DelegationRule:
    """
    Parse a rule name, case-insensitively: bfd, dfd, minsum, leximax,
    diffusion, borda, or wsum:<rank=weight,...>.
    """
    cleaned = text.strip()
    if cleaned.lower().startswith("wsum:"):
        table = WeightTable.parse(cleaned[len("wsum:"):])
        return DelegationRule(RuleKind.WEIGHTED_SUM, weighted(table))
    for rule in SHIPPED_RULES:
        if rule.name == cleaned.lower():
            return rule
    known = ', '.join(rule.name for rule in SHIPPED_RULES)
    raise InvalidConfig(f"Unknown rule '{text}'. Known rules: {known}, wsum:<table>, all")


def parse_rules(text: str) -> List[DelegationRule]:
    """Like parse_rule, but 'all' expands to every shipped rule."""
    if text.strip().lower() == "all":
        return list(SHIPPED_RULES)
    return [parse_rule(part) for part in text.split(';') if part.strip()]
