"""
Voting weights and executable axiom checks.
"""

from utils.axioms.voting_weight import WeightVector, weights
from utils.axioms.report import AxiomKind, AxiomReport, Violation
from utils.axioms.guru_participation import (
    check_guru_participation,
    check_guru_participation_star,
    majority_outcome,
    search_adversarial_ballots,
)
from utils.axioms.copy_robustness import check_copy_robustness, copy_eligible_voters
from utils.axioms.iic import check_iic
from utils.axioms.sampler import AXIOM_SAMPLER, ORACLE_SAMPLER, SamplerConfig, random_instance
from utils.axioms.trials import run_axiom_trials, run_single_trial
from utils.axioms.fixtures import (
    FIXTURES,
    ArchivedFixture,
    archive_counterexample,
    check_fixture,
    check_fixtures,
    get_fixture,
    search_counterexample,
)
from utils.axioms.summary import MATRIX_COLUMNS, property_matrix

__all__ = [
    'WeightVector',
    'weights',
    'AxiomKind',
    'AxiomReport',
    'Violation',
    'check_guru_participation',
    'check_guru_participation_star',
    'majority_outcome',
    'search_adversarial_ballots',
    'check_copy_robustness',
    'copy_eligible_voters',
    'check_iic',
    'AXIOM_SAMPLER',
    'ORACLE_SAMPLER',
    'SamplerConfig',
    'random_instance',
    'run_axiom_trials',
    'run_single_trial',
    'FIXTURES',
    'ArchivedFixture',
    'archive_counterexample',
    'check_fixture',
    'check_fixtures',
    'get_fixture',
    'search_counterexample',
    'MATRIX_COLUMNS',
    'property_matrix',
]
