"""Randomized axiom runs at full trial counts plus the archived counterexamples."""

import pytest

from utils.axioms import FIXTURES, AxiomKind, check_fixture, run_axiom_trials
from utils.errors import PreconditionUnmet
from utils.resolver import BORDA_RULE, CONFLUENT_RULES, DFD_RULE, SHIPPED_RULES

TRIALS = 1000


@pytest.mark.parametrize("rule", CONFLUENT_RULES, ids=lambda rule: rule.name)
def test_guru_participation_holds(rule):
    report = run_axiom_trials(rule, AxiomKind.GURU, TRIALS, seed=101)
    assert report.trials == TRIALS
    assert report.violations == []


@pytest.mark.parametrize("rule", [DFD_RULE, BORDA_RULE], ids=lambda rule: rule.name)
def test_copy_robustness_holds(rule):
    report = run_axiom_trials(rule, AxiomKind.COPY, TRIALS, seed=202)
    assert report.trials == TRIALS
    assert report.violations == []


@pytest.mark.parametrize("rule", SHIPPED_RULES, ids=lambda rule: rule.name)
def test_iic_holds(rule):
    report = run_axiom_trials(rule, AxiomKind.IIC, 200, seed=303)
    assert report.violations == []


@pytest.mark.parametrize("fixture", FIXTURES, ids=lambda fixture: fixture.name)
def test_archived_counterexamples_reproduce(fixture):
    for rule_name in fixture.violating_rules:
        rule = next(rule for rule in SHIPPED_RULES if rule.name == rule_name)
        assert check_fixture(rule, fixture) is not None, rule_name


def test_copy_counterexample_covers_every_sequence_rule_but_dfd():
    covered = {rule for fixture in FIXTURES if fixture.axiom is AxiomKind.COPY
               for rule in fixture.violating_rules}
    assert covered == {rule.name for rule in CONFLUENT_RULES} - {BORDA_RULE.name}
    with pytest.raises(PreconditionUnmet):
        check_fixture(DFD_RULE, next(f for f in FIXTURES if f.axiom is AxiomKind.COPY))
