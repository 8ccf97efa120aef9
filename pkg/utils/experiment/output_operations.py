"""
Tables and files produced by an experiment batch.
"""

import logging
import os
from fractions import Fraction
from typing import Dict, List, Optional, Sequence

import pandas as pd

from utils import ensure_directory
from utils.experiment.batch import InstanceOutcome
from utils.experiment.config import ExperimentConfig, SweepPoint
from utils.markdown_utils import render_experiment_report
from utils.metrics import CSV_FLOAT_FORMAT, METRIC_COLUMNS, MetricsRecord, aggregate, metrics_frame

logger = logging.getLogger(__name__)


def _point_keys(outcomes: Sequence[InstanceOutcome]) -> List[str]:
    return [key for key, _ in outcomes[0].point] if outcomes else []


def instances_frame(outcomes: Sequence[InstanceOutcome]) -> pd.DataFrame:
    """One row per (instance, rule), led by the grid point columns of a sweep."""
    frame = metrics_frame(
        (outcome.index, rule, record) for outcome in outcomes for rule, record in outcome.records
    )
    keys = _point_keys(outcomes)
    if not keys:
        return frame
    points = pd.DataFrame([dict(o.point) for o in outcomes for _ in o.records], columns=keys)
    return pd.concat([points, frame], axis=1)


def summary_frame(outcomes: Sequence[InstanceOutcome]) -> pd.DataFrame:
    """Per-rule means over every outcome, rules in configuration order."""
    by_rule: Dict[str, List[MetricsRecord]] = {}
    for outcome in outcomes:
        for rule, record in outcome.records:
            by_rule.setdefault(rule, []).append(record)
    frame = metrics_frame(
        ((len(records), rule, aggregate(records)) for rule, records in by_rule.items()),
        index_name='instances',
    )
    return frame[['rule', 'instances'] + [c for c in frame.columns if c not in ('rule', 'instances')]]


def sweep_frame(outcomes: Sequence[InstanceOutcome]) -> pd.DataFrame:
    """
    One row per (grid point, rule): the point's parameters, the mean
    isolated fraction of its instances and the rule's mean metrics.
    """
    groups: Dict[SweepPoint, List[InstanceOutcome]] = {}
    for outcome in outcomes:
        groups.setdefault(outcome.point, []).append(outcome)

    point_rows: List[dict] = []
    rows = []
    for point, group in groups.items():
        isolated = sum((1 - o.participation for o in group), Fraction(0)) / len(group)
        by_rule: Dict[str, List[MetricsRecord]] = {}
        for outcome in group:
            for rule, record in outcome.records:
                by_rule.setdefault(rule, []).append(record)
        for rule, records in by_rule.items():
            rows.append((len(records), rule, aggregate(records)))
            point_rows.append({**dict(point), 'isolated_fraction': float(isolated)})

    keys = _point_keys(outcomes)
    frame = pd.concat([pd.DataFrame(point_rows, columns=keys + ['isolated_fraction']),
                       metrics_frame(rows, index_name='instances')], axis=1)
    return frame[keys + ['rule', 'instances', 'isolated_fraction'] + METRIC_COLUMNS]


def truncation_frame(outcomes: Sequence[InstanceOutcome]) -> pd.DataFrame:
    """Mean isolated fraction and participation rate per outdegree cap (and grid point)."""
    keys = _point_keys(outcomes)
    rows = [
        {**dict(outcome.point), 'cap': d, 'isolated_fraction': float(isolated),
         'participation': float(participation)}
        for outcome in outcomes for d, isolated, participation in outcome.truncation
    ]
    if not rows:
        return pd.DataFrame(columns=keys + ['cap', 'isolated_fraction', 'participation'])
    return pd.DataFrame(rows).groupby(keys + ['cap'], as_index=False, sort=False).mean()


def popularity_frequency(outcomes: Sequence[InstanceOutcome]) -> Optional[Fraction]:
    """Share of instances whose Borda branching is popular; None if Borda was not evaluated."""
    flags = [o.borda_popular for o in outcomes if o.borda_popular is not None]
    if not flags:
        return None
    return Fraction(sum(flags), len(flags))


def save_experiment_outputs(config: ExperimentConfig, outcomes: Sequence[InstanceOutcome],
                            output_dir: str) -> Dict[str, str]:
    """
    Write the per-instance CSV, the per-rule summary CSV, the truncation
    sweep CSV and the markdown report; a parameter grid adds the per-point
    sweep CSV.

    Returns:
        Mapping from output kind to written path
    """
    ensure_directory(output_dir)
    summary = summary_frame(outcomes)
    truncation = truncation_frame(outcomes)
    popularity = popularity_frequency(outcomes)
    sweep = sweep_frame(outcomes) if config.sweep else None

    paths = {
        'instances': os.path.join(output_dir, f"{config.name}_instances.csv"),
        'summary': os.path.join(output_dir, f"{config.name}_summary.csv"),
        'truncation': os.path.join(output_dir, f"{config.name}_truncation.csv"),
        'report': os.path.join(output_dir, f"{config.name}_report.md"),
    }
    instances_frame(outcomes).to_csv(paths['instances'], index=False, float_format=CSV_FLOAT_FORMAT)
    summary.to_csv(paths['summary'], index=False, float_format=CSV_FLOAT_FORMAT)
    truncation.to_csv(paths['truncation'], index=False, float_format=CSV_FLOAT_FORMAT)
    if sweep is not None:
        paths['sweep'] = os.path.join(output_dir, f"{config.name}_sweep.csv")
        sweep.to_csv(paths['sweep'], index=False, float_format=CSV_FLOAT_FORMAT)
    report = render_experiment_report(config.name, config.describe_generator(), config.instances,
                                      config.seed, summary, truncation, popularity, sweep)
    with open(paths['report'], 'w', encoding='utf-8') as f:
        f.write(report)

    for kind, path in paths.items():
        logger.info(f"Wrote {kind} output to {path}")
    return paths
