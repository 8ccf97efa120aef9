"""
Orders over rank sequences.

One module per order family; orders.py binds them into SeqOrder objects and
properties.py holds the randomized property checks.
"""

from utils.sequence_orders.leximax import sort_desc
from utils.sequence_orders.weighted_sum import WeightTable
from utils.sequence_orders.orders import (
    BFD,
    DIFF,
    LEX,
    LEXIMAX,
    MINSUM,
    Comparison,
    OrderKind,
    SeqOrder,
    cmp,
    comparable,
    weighted,
)
from utils.sequence_orders.properties import (
    OrderAxiom,
    PropertyReport,
    check_confluence_properties,
    check_order_axiom,
    random_sequence,
)

__all__ = [
    'sort_desc',
    'WeightTable',
    'BFD',
    'DIFF',
    'LEX',
    'LEXIMAX',
    'MINSUM',
    'Comparison',
    'OrderKind',
    'SeqOrder',
    'cmp',
    'comparable',
    'weighted',
    'OrderAxiom',
    'PropertyReport',
    'check_confluence_properties',
    'check_order_axiom',
    'random_sequence',
]
