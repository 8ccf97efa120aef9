"""
Delegation rules: the confluent settle engine, depth-first delegation, the
diffusion process, outdegree truncation and the rule registry.
"""

from utils.resolver.resolution import Resolution, is_confluent_output, resolution_from_choices
from utils.resolver.settle import resolve_confluent
from utils.resolver.depth_first import dfd_path, resolve_dfd
from utils.resolver.diffusion_process import resolve_diffusion_process
from utils.resolver.truncation import isolated_fraction, truncate_outdegree
from utils.resolver.rules import (
    BFD_RULE,
    BORDA_RULE,
    CONFLUENT_RULES,
    DFD_RULE,
    DIFFUSION_RULE,
    LEXIMAX_RULE,
    MINSUM_RULE,
    SHIPPED_RULES,
    DelegationRule,
    RuleKind,
    parse_rule,
    parse_rules,
)

__all__ = [
    'Resolution',
    'is_confluent_output',
    'resolution_from_choices',
    'resolve_confluent',
    'dfd_path',
    'resolve_dfd',
    'resolve_diffusion_process',
    'isolated_fraction',
    'truncate_outdegree',
    'BFD_RULE',
    'BORDA_RULE',
    'CONFLUENT_RULES',
    'DFD_RULE',
    'DIFFUSION_RULE',
    'LEXIMAX_RULE',
    'MINSUM_RULE',
    'SHIPPED_RULES',
    'DelegationRule',
    'RuleKind',
    'parse_rule',
    'parse_rules',
]
