"""
Running an experiment batch: generate, resolve every rule, measure, and
sweep outdegree caps. With a parameter grid the batch repeats at every grid
point with the same instance seeds. Instances are independent; with more
than one worker they fan out over a process pool, and results come back in
grid order, then instance order.
"""

import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, Optional, Tuple

from utils.experiment.config import ExperimentConfig, SweepPoint
from utils.generators import generate_instance, participation_rate, read_base_graph, seed_int, spawn_seeds
from utils.generators.config import GeneratorMethod
from utils.metrics import MetricsRecord, metrics_for_rule
from utils.resolver import RuleKind, isolated_fraction, truncate_outdegree

logger = logging.getLogger(__name__)


@dataclass
class InstanceOutcome:
    """
    Results for one generated instance.

    Attributes:
        index: position in the batch
        seed: generator seed of the instance
        participation: participation rate of the evaluated instance (after max_outdegree)
        records: (rule name, metrics) per evaluated rule
        borda_popular: whether the Borda branching is popular (None if Borda was not run)
        truncation: (cap, isolated fraction, participation rate) per cap
        point: the grid point, as (parameter, value) pairs; empty without a sweep
    """
    index: int
    seed: int
    participation: Fraction
    records: List[Tuple[str, MetricsRecord]] = field(default_factory=list)
    borda_popular: Optional[bool] = None
    truncation: List[Tuple[int, Fraction, Fraction]] = field(default_factory=list)
    point: SweepPoint = ()


def run_instance(config: ExperimentConfig, index: int, seed: int, point: SweepPoint = ()) -> InstanceOutcome:
    base = None
    if config.base is not None:
        directed = config.generator.method is not GeneratorMethod.FRIENDSHIP
        base = read_base_graph(config.base, directed=directed)
    instance = generate_instance(config.generator_for(seed), base)
    if config.max_outdegree is not None:
        instance = truncate_outdegree(instance, config.max_outdegree)
    outcome = InstanceOutcome(index, seed, participation_rate(instance), point=point)

    for rule in config.rules:
        _, record = metrics_for_rule(instance, rule)
        outcome.records.append((rule.name, record))
        if rule.kind is RuleKind.BORDA:
            outcome.borda_popular = record.unpop == 0

    for d in config.truncation_caps:
        truncated = truncate_outdegree(instance, d)
        outcome.truncation.append((d, isolated_fraction(truncated), participation_rate(truncated)))

    logger.debug(f"Instance {index} (seed {seed}) done: {instance.n} voters, {instance.edge_count} edges")
    return outcome


def _run_task(task: Tuple[ExperimentConfig, int, int, SweepPoint]) -> InstanceOutcome:
    return run_instance(*task)


def instance_seeds(config: ExperimentConfig) -> List[int]:
    return [seed_int(child) for child in spawn_seeds(config.seed, config.instances)]


def run_batch(config: ExperimentConfig, workers: int = 1) -> List[InstanceOutcome]:
    """
    Args:
        config: the experiment
        workers: process count; 1 runs in this process

    Returns:
        One outcome per grid point and instance, grid point major
    """
    seeds = instance_seeds(config)
    tasks = [(config.at_point(point), i, seed, point)
             for point in config.grid() for i, seed in enumerate(seeds)]
    logger.info(f"Running {len(tasks)} instances of '{config.name}' with {workers} worker(s)")
    if workers <= 1:
        outcomes = []
        for done, task in enumerate(tasks, start=1):
            outcomes.append(_run_task(task))
            if done % 10 == 0:
                logger.info(f"Completed {done}/{len(tasks)} instances")
        return outcomes
    with ProcessPoolExecutor(max_workers=workers) as executor:
        return list(executor.map(_run_task, tasks))
