"""
Randomized checks of order-level properties.

The two confluence properties are prefix-extension invariance and suffix
dominance. The order axioms are weak and strong lexicographicity,
rank-awareness and truncation. Each check samples sequences from a seeded
numpy Generator and reports the first counterexample it meets.
"""

import logging
from dataclasses import dataclass
from enum import Enum
from typing import Optional, Tuple

import numpy as np

from utils.model.paths import RankSequence
from utils.sequence_orders.orders import LEX, Comparison, SeqOrder, cmp, comparable

logger = logging.getLogger(__name__)

MEAN_LENGTH = 4
MAX_SAMPLED_RANK = 6


class OrderAxiom(Enum):
    WEAKLY_LEX = "weakly_lex"
    STRONGLY_LEX = "strongly_lex"
    RANK_AWARE = "rank_aware"
    TRUNCATION = "truncation"


@dataclass
class PropertyReport:
    order: str
    prop: str
    checked: int = 0
    counterexample: Optional[Tuple[RankSequence, ...]] = None

    @property
    def passed(self) -> bool:
        return self.counterexample is None

    def __str__(self) -> str:
        if self.passed:
            return f"{self.order} / {self.prop}: {self.checked} cases, no counterexample"
        return f"{self.order} / {self.prop}: counterexample {self.counterexample} after {self.checked} cases"


def random_sequence(rng: np.random.Generator, max_rank: int = MAX_SAMPLED_RANK) -> RankSequence:
    """Geometric length with mean MEAN_LENGTH, ranks uniform in 1..max_rank."""
    length = int(rng.geometric(1 / MEAN_LENGTH))
    return tuple(int(r) for r in rng.integers(1, max_rank + 1, size=length))


def random_comparable_pair(rng: np.random.Generator) -> Tuple[RankSequence, RankSequence]:
    s = random_sequence(rng)
    t = random_sequence(rng)
    while not comparable(s, t):
        t = random_sequence(rng)
    return s, t


def _is_better(order: SeqOrder, s: RankSequence, t: RankSequence) -> bool:
    return cmp(order, s, t) is Comparison.BETTER


def check_confluence_properties(order: SeqOrder, rng: np.random.Generator,
                                samples: int = 10_000) -> PropertyReport:
    """
    Sample comparable pairs (s, t) and a rank x and check
    (i) s better than t iff (x, s) better than (x, t), and
    (ii) s better than (u, s) for a non-empty u whenever the two are comparable.
    """
    report = PropertyReport(order.name, "confluence")
    for _ in range(samples):
        s, t = random_comparable_pair(rng)
        x = int(rng.integers(1, MAX_SAMPLED_RANK + 1))
        report.checked += 1

        if cmp(order, s, t) is not cmp(order, (x,) + s, (x,) + t):
            report.counterexample = (s, t, (x,))
            break

        u = random_sequence(rng)
        extended = u + s
        if comparable(s, extended) and not _is_better(order, s, extended):
            report.counterexample = (s, extended)
            break

    logger.debug(str(report))
    return report


def _axiom_case(axiom: OrderAxiom, order: SeqOrder, rng: np.random.Generator
                ) -> Optional[Tuple[RankSequence, ...]]:
    """Draw one case for the axiom; return it if it violates the axiom."""
    if axiom is OrderAxiom.WEAKLY_LEX:
        s = random_sequence(rng)
        last = int(rng.integers(1, MAX_SAMPLED_RANK + 1))
        while last == s[-1]:
            last = int(rng.integers(1, MAX_SAMPLED_RANK + 1))
        t = s[:-1] + (last,)
        if cmp(order, s, t) is not cmp(LEX, s, t):
            return s, t
        return None

    if axiom is OrderAxiom.STRONGLY_LEX:
        s = random_sequence(rng)
        t = tuple(int(r) for r in rng.integers(1, MAX_SAMPLED_RANK + 1, size=len(s)))
        if not comparable(s, t):
            return None
        if cmp(order, s, t) is not cmp(LEX, s, t):
            return s, t
        return None

    if axiom is OrderAxiom.RANK_AWARE:
        s, t = random_comparable_pair(rng)
        if max(s) == max(t):
            return None
        if max(t) < max(s):
            s, t = t, s
        if not _is_better(order, s, t):
            return s, t
        return None

    # truncation: s, s' without a joint prefix, x above everything in t and t'
    s, s2 = random_comparable_pair(rng)
    if s[0] == s2[0]:
        return None
    x = int(rng.integers(2, MAX_SAMPLED_RANK + 2))
    t = random_sequence(rng, max_rank=x - 1) if rng.random() < 0.75 else ()
    t2 = random_sequence(rng, max_rank=x - 1) if rng.random() < 0.75 else ()
    long_s = s + (x,) + t
    long_s2 = s2 + (x,) + t2
    if _is_better(order, long_s, long_s2) and not _is_better(order, s, s2):
        return s, s2, (x,), t, t2
    return None


def check_order_axiom(order: SeqOrder, axiom: OrderAxiom, rng: np.random.Generator,
                      samples: int = 10_000) -> PropertyReport:
    """
    Sample sequences relevant to the axiom and report the first violation.
    """
    report = PropertyReport(order.name, axiom.value)
    for _ in range(samples):
        report.checked += 1
        case = _axiom_case(axiom, order, rng)
        if case is not None:
            report.counterexample = case
            break
    logger.debug(str(report))
    return report
