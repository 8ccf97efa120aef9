"""
Randomized falsification runs.

Each trial samples a small instance, picks the voter the axiom acts on
(and ballots for the majority variant) and runs the check. Trials in which
no voter qualifies (no delegating voter, or no single-edge path for
copy-robustness) are redrawn and do not count.
"""

import logging
from typing import Optional, Tuple

import numpy as np

from utils.axioms.copy_robustness import check_copy_robustness, copy_eligible_voters
from utils.axioms.guru_participation import check_guru_participation, check_guru_participation_star
from utils.axioms.iic import check_iic
from utils.axioms.report import AxiomKind, AxiomReport, Violation
from utils.axioms.sampler import AXIOM_SAMPLER, SamplerConfig, random_instance
from utils.branching import PriorityOrder
from utils.generators.rng import make_rng
from utils.model import Instance
from utils.resolver import DelegationRule

logger = logging.getLogger(__name__)

REDRAW_FACTOR = 50


def run_single_trial(rule: DelegationRule, axiom: AxiomKind, instance: Instance,
                     rng: np.random.Generator,
                     priority: Optional[PriorityOrder] = None) -> Tuple[bool, Optional[Violation]]:
    """
    Returns:
        (whether the instance admitted a check, the violation found if any)
    """
    if axiom is AxiomKind.IIC:
        return True, check_iic(rule, instance, priority)

    res = rule.resolve(instance, priority)
    candidates = copy_eligible_voters(res) if axiom is AxiomKind.COPY else res.voters()
    if not candidates:
        return False, None
    v = int(rng.choice(candidates))

    if axiom is AxiomKind.GURU:
        return True, check_guru_participation(rule, instance, v, priority)
    if axiom is AxiomKind.GURU_STAR:
        ballots = {c: int(rng.integers(0, 2)) for c in sorted(instance.casting)}
        return True, check_guru_participation_star(rule, instance, v, ballots, priority)
    return True, check_copy_robustness(rule, instance, v, priority)


def run_axiom_trials(rule: DelegationRule, axiom: AxiomKind, trials: int, seed: int,
                     priority: Optional[PriorityOrder] = None,
                     sampler: SamplerConfig = AXIOM_SAMPLER,
                     stop_at_first: bool = False) -> AxiomReport:
    """
    Run ``trials`` counted trials from one seeded stream and collect every violation.
    """
    rng = make_rng(seed)
    report = AxiomReport(axiom.value, rule.name, 0, seed)
    attempts = 0
    while report.trials < trials and attempts < REDRAW_FACTOR * trials:
        attempts += 1
        instance = random_instance(rng, sampler)
        checked, violation = run_single_trial(rule, axiom, instance, rng, priority)
        if not checked:
            continue
        report.trials += 1
        if violation is not None:
            report.violations.append(violation)
            if stop_at_first:
                break

    if report.trials < trials and not (stop_at_first and report.violations):
        logger.warning(f"Only {report.trials} of {trials} {axiom.value} trials found an eligible voter")
    logger.info(f"{axiom.value} / {rule.name}: {report.trials} trials, {len(report.violations)} violations")
    return report
