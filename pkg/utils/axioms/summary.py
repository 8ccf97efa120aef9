"""
Rule-by-property evidence matrix.
"""

import logging
from typing import Optional, Sequence

import pandas as pd

from utils.axioms.fixtures import check_fixtures
from utils.axioms.report import AxiomKind
from utils.axioms.trials import run_axiom_trials
from utils.branching import PriorityOrder
from utils.generators.rng import make_rng
from utils.resolver import DelegationRule
from utils.sequence_orders import OrderAxiom, check_order_axiom

logger = logging.getLogger(__name__)

MATRIX_COLUMNS = ['rule', 'confluent', 'guru', 'copy', 'weakly_lex', 'strongly_lex', 'rank_aware']
ORDER_SAMPLES = 2_000


def _verdict(passed: bool) -> str:
    return "yes" if passed else "no"


def property_matrix(rules: Sequence[DelegationRule], trials: int, seed: int,
                    priority: Optional[PriorityOrder] = None) -> pd.DataFrame:
    """
    One row per rule. Voter axioms combine randomized trials with the archived
    fixtures; order axioms are sampled on the rule's order ("-" for rules not
    defined by an order).
    """
    rows = []
    for rule in rules:
        row = {'rule': rule.name, 'confluent': _verdict(rule.confluent)}
        for axiom, column in ((AxiomKind.GURU, 'guru'), (AxiomKind.COPY, 'copy')):
            report = run_axiom_trials(rule, axiom, trials, seed, priority)
            violations = report.violations + check_fixtures(rule, axiom, priority)
            row[column] = _verdict(not violations)
        for order_axiom in (OrderAxiom.WEAKLY_LEX, OrderAxiom.STRONGLY_LEX, OrderAxiom.RANK_AWARE):
            if rule.order is None:
                row[order_axiom.value] = "-"
            else:
                result = check_order_axiom(rule.order, order_axiom, make_rng(seed), ORDER_SAMPLES)
                row[order_axiom.value] = _verdict(result.passed)
        logger.info(f"Property row for {rule.name}: {row}")
        rows.append(row)
    return pd.DataFrame(rows, columns=MATRIX_COLUMNS)
