"""
Evaluation metrics of a resolution.

Path metrics (maximum rank, maximum and average length, maximum rank sum)
apply to every rule. The branching metrics (average rank of the chosen
first edges, normalized unpopularity margin) only make sense when the
first edges form a C-branching, i.e. for confluent resolutions.
"""

import logging
from dataclasses import asdict, dataclass, fields
from fractions import Fraction
from typing import Iterable, List, Optional, Sequence, Tuple, Union

import pandas as pd

from utils.axioms import weights
from utils.branching import Branching, PriorityOrder, best_response
from utils.errors import NonConfluentMetrics
from utils.model import Instance
from utils.resolver import DelegationRule, Resolution, is_confluent_output

logger = logging.getLogger(__name__)

Number = Union[int, Fraction]

METRIC_COLUMNS = ['max_rank', 'max_len', 'avg_len', 'max_sum', 'max_weight', 'avg_rank', 'unpop']
CSV_FLOAT_FORMAT = '%.6g'


@dataclass(frozen=True)
class MetricsRecord:
    max_rank: Number
    max_len: Number
    avg_len: Fraction
    max_sum: Number
    max_weight: Fraction
    avg_rank: Optional[Fraction] = None
    unpop: Optional[Fraction] = None

    def as_row(self) -> dict:
        return asdict(self)


def compute_metrics(instance: Instance, res: Resolution, branching_metrics: bool = True) -> MetricsRecord:
    """
    Args:
        instance: the instance the resolution belongs to
        res: a complete resolution
        branching_metrics: also compute avg_rank and unpop

    Raises:
        NonConfluentMetrics: branching metrics requested for a non-confluent resolution
    """
    if branching_metrics and not is_confluent_output(res):
        raise NonConfluentMetrics(f"Resolution of {res.rule} is not confluent; avg_rank and unpop are undefined")

    sequences = [res.sequence(v) for v in res.voters()]
    lengths = [len(s) for s in sequences]
    delegators = len(sequences)
    max_rank = max((max(s) for s in sequences), default=0)
    max_len = max(lengths, default=0)
    avg_len = Fraction(sum(lengths), delegators) if delegators else Fraction(0)
    max_sum = max((sum(s) for s in sequences), default=0)
    max_weight = weights(instance, res).max_weight()

    avg_rank = unpop = None
    if branching_metrics:
        first_edges = res.first_edges()
        avg_rank = (Fraction(sum(e.rank for e in first_edges.values()), delegators)
                    if delegators else Fraction(0))
        if delegators:
            margin, _ = best_response(instance, Branching(first_edges))
            unpop = Fraction(margin, len(instance.casting) + delegators)
        else:
            unpop = Fraction(0)

    return MetricsRecord(max_rank, max_len, avg_len, max_sum, max_weight, avg_rank, unpop)


def metrics_for_rule(instance: Instance, rule: DelegationRule,
                     priority: Optional[PriorityOrder] = None) -> Tuple[Resolution, MetricsRecord]:
    """Resolve and measure; branching metrics only for confluent rules."""
    res = rule.resolve(instance, priority)
    return res, compute_metrics(instance, res, branching_metrics=rule.confluent)


def aggregate(records: Sequence[MetricsRecord]) -> MetricsRecord:
    """
    Field-wise arithmetic mean with exact rationals. Optional fields are
    averaged over the records that carry them.

    Raises:
        ValueError: no records
    """
    if not records:
        raise ValueError("Cannot aggregate an empty list of metrics records")
    means = {}
    for f in fields(MetricsRecord):
        values = [getattr(r, f.name) for r in records if getattr(r, f.name) is not None]
        means[f.name] = sum(values, Fraction(0)) / len(values) if values else None
    return MetricsRecord(**means)


def metrics_frame(rows: Iterable[Tuple[object, str, MetricsRecord]],
                  index_name: str = 'instance') -> pd.DataFrame:
    """
    One row per (instance id, rule); rationals converted to floats, missing
    values left empty.
    """
    data: List[dict] = []
    for key, rule, record in rows:
        row = {index_name: key, 'rule': rule}
        for column in METRIC_COLUMNS:
            value = getattr(record, column)
            row[column] = None if value is None else float(value)
        data.append(row)
    return pd.DataFrame(data, columns=[index_name, 'rule'] + METRIC_COLUMNS)


def frame_to_csv(frame: pd.DataFrame) -> str:
    """CSV with numbers at 6 significant digits."""
    return frame.to_csv(index=False, float_format=CSV_FLOAT_FORMAT)
