"""Tests for the delegation rules on the example instance and random instances."""

from fractions import Fraction

import pytest

from utils.axioms import random_instance
from utils.errors import InvalidConfig, NotConfluentOrder
from utils.generators import make_rng
from utils.instance_load import parse_v1
from utils.model import delegating_voters
from utils.resolver import (
    BFD_RULE,
    BORDA_RULE,
    DFD_RULE,
    DIFFUSION_RULE,
    LEXIMAX_RULE,
    MINSUM_RULE,
    SHIPPED_RULES,
    RuleKind,
    dfd_path,
    is_confluent_output,
    isolated_fraction,
    parse_rule,
    parse_rules,
    resolve_confluent,
    resolve_diffusion_process,
    truncate_outdegree,
)
from utils.sequence_orders import DIFF, LEX, WeightTable, weighted


def _trail(instance, res, name):
    return ''.join(instance.name(v) for v in res.paths[instance.id_of(name)].voters())


def _gurus(instance, res):
    return {instance.name(v): instance.name(res.guru(v)) for v in res.voters()}


def test_dfd_on_fig1(fig1):
    res = DFD_RULE.resolve(fig1)
    assert _trail(fig1, res, "a") == "abcdefk"
    assert res.sequence(fig1.id_of("a")) == (1, 1, 1, 1, 2, 4)
    assert _trail(fig1, res, "d") == "debci"
    assert res.sequence(fig1.id_of("d")) == (1, 1, 1, 3)
    assert _trail(fig1, res, "c") == "cdefk"
    assert _trail(fig1, res, "e") == "ebcdj"


def test_dfd_output_is_not_confluent(fig1):
    assert not is_confluent_output(DFD_RULE.resolve(fig1))


def test_dfd_path_of_casting_and_isolated_voters(fig1, ids):
    assert dfd_path(fig1, ids["i"]) is None
    assert dfd_path(fig1, ids["g"]) is None


def test_bfd_on_fig1(fig1):
    res = BFD_RULE.resolve(fig1)
    assert _trail(fig1, res, "a") == "abci"
    assert res.sequence(fig1.id_of("a")) == (1, 1, 3)
    assert _trail(fig1, res, "d") == "dj"
    assert _trail(fig1, res, "c") == "ci"
    assert _trail(fig1, res, "f") == "fk"
    assert _trail(fig1, res, "e") == "efk"
    assert res.sequence(fig1.id_of("e")) == (2, 4)
    assert is_confluent_output(res)


def test_minsum_on_fig1(fig1):
    gurus = _gurus(fig1, MINSUM_RULE.resolve(fig1))
    assert gurus == {"a": "j", "b": "j", "c": "j", "d": "j", "e": "j", "f": "k"}


@pytest.mark.parametrize("rule", [LEXIMAX_RULE, DIFFUSION_RULE, BORDA_RULE])
def test_everyone_reaches_j(fig1, rule):
    gurus = _gurus(fig1, rule.resolve(fig1))
    assert set(gurus) == set("abcdef")
    assert set(gurus.values()) == {"j"}


def test_leximax_routes_f_through_e(fig1):
    res = LEXIMAX_RULE.resolve(fig1)
    assert _trail(fig1, res, "f") == "febcdj"


@pytest.mark.parametrize("rule", SHIPPED_RULES, ids=lambda rule: rule.name)
def test_resolution_covers_exactly_the_delegating_voters(fig1, rule):
    res = rule.resolve(fig1)
    assert res.voters() == delegating_voters(fig1)
    for v in res.voters():
        path = res.paths[v]
        assert path.start == v
        assert fig1.is_casting(path.guru)


@pytest.mark.parametrize("rule", [r for r in SHIPPED_RULES if r.confluent], ids=lambda rule: rule.name)
def test_confluent_rules_on_random_instances(rule):
    rng = make_rng(5)
    for _ in range(200):
        instance = random_instance(rng)
        res = rule.resolve(instance)
        assert is_confluent_output(res)
        assert res.voters() == delegating_voters(instance)


def test_diffusion_process_matches_settle_engine():
    rng = make_rng(8)
    for _ in range(300):
        instance = random_instance(rng)
        process = resolve_diffusion_process(instance)
        settled = resolve_confluent(instance, DIFF)
        assert process.voters() == settled.voters()
        for v in process.voters():
            assert process.sequence(v) == settled.sequence(v)
            assert process.guru(v) == settled.guru(v)


def test_settle_engine_refuses_non_confluent_orders(fig1):
    with pytest.raises(NotConfluentOrder):
        resolve_confluent(fig1, LEX)
    with pytest.raises(NotConfluentOrder):
        resolve_confluent(fig1, weighted(WeightTable.parse("1=0,2=1")))


def test_weighted_sum_with_identity_weights_matches_minsum(fig1):
    rule = parse_rule("wsum:1=1")
    assert rule.kind is RuleKind.WEIGHTED_SUM
    assert _gurus(fig1, rule.resolve(fig1)) == _gurus(fig1, MINSUM_RULE.resolve(fig1))


def test_no_delegating_voters():
    instance = parse_v1("a: b\nb: a\ncasting: c\n")
    for rule in SHIPPED_RULES:
        assert rule.resolve(instance).paths == {}


def test_truncate_outdegree(fig1, ids):
    capped = truncate_outdegree(fig1, 1)
    assert capped.targets(ids["c"]) == [ids["d"]]
    assert capped.targets(ids["f"]) == [ids["e"]]
    nobody = truncate_outdegree(fig1, 0)
    assert nobody.edge_count == 0
    assert isolated_fraction(nobody) == Fraction(8, 11)
    assert truncate_outdegree(fig1, 10) == fig1


def test_truncation_to_one_isolates_the_first_choice_cycle(fig1):
    # with first choices only, a -> b -> c -> d -> e -> b never reaches a casting voter
    capped = truncate_outdegree(fig1, 1)
    assert delegating_voters(capped) == []


@pytest.mark.parametrize("text, expected", [
    ("bfd", BFD_RULE),
    ("BFD", BFD_RULE),
    (" Diffusion ", DIFFUSION_RULE),
    ("dfd", DFD_RULE),
    ("borda", BORDA_RULE),
])
def test_parse_rule(text, expected):
    assert parse_rule(text) == expected


def test_parse_rule_weighted_sum_name():
    rule = parse_rule("WSUM:1=1,2=3")
    assert rule.name.startswith("wsum")
    assert rule.confluent


@pytest.mark.parametrize("text", ["bestfirst", "", "wsum:", "wsum:2=1"])
def test_parse_rule_rejects_unknown(text):
    with pytest.raises(InvalidConfig):
        parse_rule(text)


def test_parse_rules():
    assert parse_rules("all") == list(SHIPPED_RULES)
    assert parse_rules("bfd;minsum") == [BFD_RULE, MINSUM_RULE]
