"""
Guru-participation and its binary-majority variant.

A delegating voter v is removed from the delegation graph (all its outgoing
edges deleted). No casting voter other than v's guru may gain relative
weight from this. The variant compares majority outcomes instead: with
ballots in {0, 1} the outcome is 1, 0 or 1/2 (tie), and v's guru must weakly
prefer the outcome reached while v delegates to it.
"""

import itertools
import logging
from fractions import Fraction
from typing import Dict, Optional

from utils.axioms.report import Violation
from utils.axioms.voting_weight import WeightVector, weights
from utils.branching import PriorityOrder
from utils.errors import PreconditionUnmet
from utils.model import Instance, VoterId
from utils.resolver import DelegationRule

logger = logging.getLogger(__name__)

TIE = Fraction(1, 2)
MAX_BALLOT_VOTERS = 16

Ballots = Dict[VoterId, int]


def _before_after(rule: DelegationRule, instance: Instance, v: VoterId,
                  priority: Optional[PriorityOrder]):
    res = rule.resolve(instance, priority)
    if v not in res.paths:
        raise PreconditionUnmet(f"Voter {instance.name(v)} is not delegating under {rule.name}")
    guru = res.guru(v)
    reduced = instance.without_out_edges(v)
    before = weights(instance, res)
    after = weights(reduced, rule.resolve(reduced, priority))
    return guru, before, after


def check_guru_participation(rule: DelegationRule, instance: Instance, v: VoterId,
                             priority: Optional[PriorityOrder] = None) -> Optional[Violation]:
    """
    Returns:
        The first casting voter (by id) other than the guru whose weight
        drops when v stops delegating, as a Violation; None if the check passes.
    """
    guru, before, after = _before_after(rule, instance, v, priority)
    for u in before.casting_voters():
        if u != guru and before[u] > after[u]:
            detail = (f"removing {instance.name(v)} (guru {instance.name(guru)}) lowers "
                      f"{instance.name(u)} from {before[u]} to {after[u]}")
            logger.debug(detail)
            return Violation(instance, v, detail)
    return None


def majority_outcome(weight_vector: WeightVector, ballots: Ballots) -> Fraction:
    """1 if the weighted yes-share exceeds 1/2, 0 if it is below, 1/2 on a tie."""
    share = sum((weight_vector[c] for c in weight_vector.casting_voters() if ballots[c] == 1),
                Fraction(0))
    if share > TIE:
        return Fraction(1)
    if share < TIE:
        return Fraction(0)
    return TIE


def _prefers(ballot: int, first: Fraction, second: Fraction) -> bool:
    """Strict preference of a casting voter with the given ballot."""
    return first > second if ballot == 1 else first < second


def check_guru_participation_star(rule: DelegationRule, instance: Instance, v: VoterId,
                                  ballots: Ballots,
                                  priority: Optional[PriorityOrder] = None) -> Optional[Violation]:
    missing = [instance.name(c) for c in instance.casting if c not in ballots]
    if missing:
        raise PreconditionUnmet(f"Ballots missing for casting voters {missing}")
    guru, before, after = _before_after(rule, instance, v, priority)
    outcome = majority_outcome(before, ballots)
    outcome_without = majority_outcome(after, ballots)
    if outcome == outcome_without or _prefers(ballots[guru], outcome, outcome_without):
        return None
    shown = ', '.join(f"{instance.name(c)}={ballots[c]}" for c in sorted(ballots))
    detail = (f"ballots {shown}: outcome {outcome} with {instance.name(v)} delegating, "
              f"{outcome_without} without; guru {instance.name(guru)} prefers the latter")
    return Violation(instance, v, detail)


def search_adversarial_ballots(rule: DelegationRule, instance: Instance, v: VoterId,
                               priority: Optional[PriorityOrder] = None) -> Optional[Ballots]:
    """
    Enumerate binary ballots over the casting voters and return the first
    one under which the majority variant fails, or None.
    """
    casting = sorted(instance.casting)
    if len(casting) > MAX_BALLOT_VOTERS:
        raise PreconditionUnmet(f"Ballot search is limited to {MAX_BALLOT_VOTERS} casting voters")
    guru, before, after = _before_after(rule, instance, v, priority)
    for values in itertools.product((1, 0), repeat=len(casting)):
        ballots = dict(zip(casting, values))
        outcome = majority_outcome(before, ballots)
        outcome_without = majority_outcome(after, ballots)
        if outcome != outcome_without and not _prefers(ballots[guru], outcome, outcome_without):
            return ballots
    return None
