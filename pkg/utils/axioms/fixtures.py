"""
Archived counterexamples.

Each fixture pins one instance and the voter (and ballots) exposing an axiom
violation for the listed rules. Fixtures are re-checked under every rule;
rules outside the list are expected to pass.
"""

import logging
import os
import re
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

from utils import ensure_directory
from utils.axioms.copy_robustness import check_copy_robustness
from utils.axioms.guru_participation import check_guru_participation, check_guru_participation_star
from utils.axioms.report import AxiomKind, Violation
from utils.axioms.sampler import AXIOM_SAMPLER, SamplerConfig
from utils.axioms.trials import run_axiom_trials
from utils.branching import PriorityOrder
from utils.errors import PreconditionUnmet
from utils.instance_load import load_instance
from utils.instance_output import write_instance
from utils.model import Instance
from utils.path_constants import get_absolute_fixtures_path
from utils.resolver import DelegationRule

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ArchivedFixture:
    name: str
    filename: str
    axiom: Optional[AxiomKind] = None
    voter: Optional[str] = None
    violating_rules: Tuple[str, ...] = ()
    ballots: Dict[str, int] = field(default_factory=dict)

    def load(self) -> Instance:
        return load_instance(os.path.join(get_absolute_fixtures_path(), self.filename))


FIXTURES: Tuple[ArchivedFixture, ...] = (
    ArchivedFixture("copy_ring", "copy_ring.txt", AxiomKind.COPY, "u",
                    ("bfd", "minsum", "leximax", "diffusion")),
    ArchivedFixture("dfd_guru", "dfd_guru.txt", AxiomKind.GURU, "v", ("dfd",)),
    ArchivedFixture("dfd_guru_star", "dfd_guru.txt", AxiomKind.GURU_STAR, "v", ("dfd",),
                    {"c": 1, "u": 0}),
    ArchivedFixture("no_popular", "no_popular.txt"),
)


def get_fixture(name: str) -> ArchivedFixture:
    for fixture in FIXTURES:
        if fixture.name == name:
            return fixture
    raise KeyError(f"No archived fixture named '{name}'")


def check_fixture(rule: DelegationRule, fixture: ArchivedFixture,
                  priority: Optional[PriorityOrder] = None) -> Optional[Violation]:
    """
    Re-run the fixture's axiom under ``rule``.

    Raises:
        PreconditionUnmet: the fixture's voter does not qualify under this rule
    """
    instance = fixture.load()
    v = instance.id_of(fixture.voter)
    if fixture.axiom is AxiomKind.GURU:
        return check_guru_participation(rule, instance, v, priority)
    if fixture.axiom is AxiomKind.GURU_STAR:
        ballots = {instance.id_of(name): value for name, value in fixture.ballots.items()}
        return check_guru_participation_star(rule, instance, v, ballots, priority)
    if fixture.axiom is AxiomKind.COPY:
        return check_copy_robustness(rule, instance, v, priority)
    raise PreconditionUnmet(f"Fixture {fixture.name} carries no axiom witness")


def check_fixtures(rule: DelegationRule, axiom: AxiomKind,
                   priority: Optional[PriorityOrder] = None) -> List[Violation]:
    violations = []
    for fixture in FIXTURES:
        if fixture.axiom is not axiom:
            continue
        try:
            violation = check_fixture(rule, fixture, priority)
        except PreconditionUnmet as exc:
            logger.debug(f"Fixture {fixture.name} skipped for {rule.name}: {exc}")
            continue
        if violation is not None:
            violations.append(violation)
    return violations


def search_counterexample(rule: DelegationRule, axiom: AxiomKind, seed: int, max_trials: int,
                          priority: Optional[PriorityOrder] = None,
                          sampler: SamplerConfig = AXIOM_SAMPLER) -> Optional[Violation]:
    """Randomized falsification until the first violation, or None after max_trials."""
    report = run_axiom_trials(rule, axiom, max_trials, seed, priority, sampler, stop_at_first=True)
    return report.violations[0] if report.violations else None


def _safe_name(text: str) -> str:
    return re.sub(r'[^A-Za-z0-9_-]+', '_', text).strip('_')


def archive_counterexample(violation: Violation, rule: DelegationRule, axiom: AxiomKind,
                           directory: Optional[str] = None, name: Optional[str] = None) -> str:
    """
    Write the witness instance as a v1 file with the rule, axiom, voter and
    detail in its header comments.

    Returns:
        Path of the written fixture
    """
    directory = ensure_directory(directory or get_absolute_fixtures_path())
    if name is None:
        name = f"{_safe_name(axiom.value)}_{_safe_name(rule.name)}"
    path = os.path.join(directory, f"{name}.txt")
    voter = "-" if violation.voter is None else violation.instance.name(violation.voter)
    header = [
        f"axiom: {axiom.value}",
        f"rule: {rule.name}",
        f"voter: {voter}",
        f"detail: {violation.detail}",
    ]
    write_instance(violation.instance, path, header)
    logger.info(f"Archived {axiom.value} counterexample for {rule.name} at {path}")
    return path
