"""
Cross-checks of the polynomial algorithms against exhaustive enumeration.
"""

import pytest

from utils.axioms import ORACLE_SAMPLER, SamplerConfig, random_instance
from utils.branching import PriorityOrder, borda_branching, is_branching, unpopularity_margin
from utils.errors import InvalidConfig, PathBudgetExceeded, PreconditionUnmet
from utils.generators import make_rng
from utils.oracle import (
    OracleBudget,
    brute_force_borda,
    brute_force_min_cost,
    enumerate_branchings,
    has_popular_branching,
    oracle_best_path,
    oracle_best_sequence,
    oracle_unpopularity,
    popular_branchings,
)
from utils.resolver import BFD_RULE, DFD_RULE, DIFFUSION_RULE, LEXIMAX_RULE, MINSUM_RULE, parse_rule
from utils.sequence_orders import BFD, DIFF, LEX, LEXIMAX, MINSUM

SMALL = SamplerConfig(min_voters=2, max_voters=8)

SEQUENCE_RULES = [DFD_RULE, BFD_RULE, MINSUM_RULE, LEXIMAX_RULE, DIFFUSION_RULE, parse_rule("wsum:1=1,2=4,3=5")]


@pytest.mark.parametrize("rule", SEQUENCE_RULES, ids=lambda rule: rule.name)
def test_resolver_matches_oracle(rule):
    rng = make_rng(21)
    for _ in range(100):
        instance = random_instance(rng, ORACLE_SAMPLER)
        res = rule.resolve(instance)
        for v in res.voters():
            assert res.sequence(v) == oracle_best_sequence(instance, v, rule.order)


@pytest.mark.parametrize("order, name, expected", [
    (LEX, "a", (1, 1, 1, 1, 2, 4)),
    (BFD, "a", (1, 1, 3)),
    (MINSUM, "f", (4,)),
    (LEXIMAX, "f", (1, 1, 1, 1, 2)),
    (DIFF, "c", (1, 2)),
])
def test_oracle_on_fig1(fig1, order, name, expected):
    assert oracle_best_sequence(fig1, fig1.id_of(name), order) == expected


def test_oracle_path_ends_at_casting(fig1, ids):
    path = oracle_best_path(fig1, ids["d"], BFD)
    assert path.guru == ids["j"]


def test_oracle_isolated_voter(fig1, ids):
    with pytest.raises(PreconditionUnmet):
        oracle_best_path(fig1, ids["g"], BFD)


def test_oracle_path_budget(fig1, ids):
    with pytest.raises(PathBudgetExceeded):
        oracle_best_path(fig1, ids["d"], BFD, OracleBudget(max_paths=2))


def test_budget_must_be_positive():
    with pytest.raises(InvalidConfig):
        OracleBudget(max_paths=0)


def test_enumerate_branchings_counts(mutual_pair, star):
    assert len(enumerate_branchings(mutual_pair)) == 3
    assert len(enumerate_branchings(star)) == 1


def test_enumerate_branchings_reverse_recount():
    rng = make_rng(3)
    for _ in range(50):
        instance = random_instance(rng, SMALL)
        forward = {b.signature() for b in enumerate_branchings(instance)}
        backward = {b.signature() for b in enumerate_branchings(instance, reverse=True)}
        assert forward == backward
        assert all(is_branching(instance, b.choice) for b in enumerate_branchings(instance))


def test_enumerate_branchings_budget(fig1):
    with pytest.raises(PathBudgetExceeded):
        enumerate_branchings(fig1, OracleBudget(max_branchings=1))


def test_borda_matches_brute_force():
    rng = make_rng(4)
    for _ in range(100):
        instance = random_instance(rng, SMALL)
        fast = borda_branching(instance)
        assert fast.total_rank() == brute_force_min_cost(instance)
        assert fast.signature() == brute_force_borda(instance).signature()


def test_borda_matches_brute_force_with_reversed_priority():
    rng = make_rng(5)
    for _ in range(50):
        instance = random_instance(rng, SMALL)
        priority = PriorityOrder(tuple(reversed(range(instance.n))))
        fast = borda_branching(instance, priority)
        assert fast.signature() == brute_force_borda(instance, priority).signature()


def test_unpopularity_matches_brute_force():
    rng = make_rng(6)
    for _ in range(200):
        instance = random_instance(rng, SMALL)
        branchings = enumerate_branchings(instance)
        branching = branchings[int(rng.integers(len(branchings)))]
        assert unpopularity_margin(instance, branching) == oracle_unpopularity(instance, branching)


def test_popular_branchings(mutual_pair, no_popular):
    popular = {b.signature() for b in popular_branchings(mutual_pair)}
    assert borda_branching(mutual_pair).signature() in popular
    assert len(popular) == 2
    assert has_popular_branching(mutual_pair)
    assert not has_popular_branching(no_popular)


FULL_RANKINGS = SamplerConfig(min_voters=5, max_voters=5, min_out_degree=4, max_out_degree=4,
                              casting_fraction=0.0)


def test_full_ranking_sampler():
    rng = make_rng(30)
    for _ in range(20):
        instance = random_instance(rng, FULL_RANKINGS)
        assert instance.n == 5
        assert len(instance.casting) == 1
        for v in instance.voters():
            if not instance.is_casting(v):
                assert sorted(instance.targets(v)) == [w for w in instance.voters() if w != v]


def test_random_search_finds_instance_without_popular_branching():
    rng = make_rng(31)
    for _ in range(5000):
        instance = random_instance(rng, FULL_RANKINGS)
        if not has_popular_branching(instance):
            break
    else:
        pytest.fail("no instance without a popular branching in 5000 draws")
    for branching in enumerate_branchings(instance):
        assert unpopularity_margin(instance, branching) > 0


def test_brute_force_min_cost_fig1(fig1):
    assert brute_force_min_cost(fig1) == 7
