"""Tests for voting weights, the axiom checks and the archived counterexamples."""

import json
from fractions import Fraction

import pytest

from utils.axioms import (
    FIXTURES,
    MATRIX_COLUMNS,
    AxiomKind,
    AxiomReport,
    archive_counterexample,
    check_copy_robustness,
    check_fixture,
    check_fixtures,
    check_guru_participation,
    check_guru_participation_star,
    check_iic,
    get_fixture,
    majority_outcome,
    property_matrix,
    run_axiom_trials,
    search_adversarial_ballots,
    search_counterexample,
    weights,
)
from utils.errors import PreconditionUnmet
from utils.instance_load import load_instance, parse_v1
from utils.resolver import (
    BFD_RULE,
    BORDA_RULE,
    CONFLUENT_RULES,
    DFD_RULE,
    DIFFUSION_RULE,
    MINSUM_RULE,
    SHIPPED_RULES,
    parse_rule,
)


def _named(instance, vector):
    return {instance.name(c): vector[c] for c in vector.casting_voters()}


def test_weights_fig1_diffusion(fig1):
    vector = weights(fig1, DIFFUSION_RULE.resolve(fig1))
    assert _named(fig1, vector) == {"i": Fraction(1, 9), "j": Fraction(7, 9), "k": Fraction(1, 9)}
    assert vector.denominator == 9
    assert vector.total() == 1


def test_weights_fig1_bfd(fig1):
    vector = weights(fig1, BFD_RULE.resolve(fig1))
    assert _named(fig1, vector) == {"i": Fraction(4, 9), "j": Fraction(2, 9), "k": Fraction(3, 9)}
    assert vector.max_weight() == Fraction(4, 9)


def test_weights_fig1_minsum(fig1):
    vector = weights(fig1, MINSUM_RULE.resolve(fig1))
    assert _named(fig1, vector) == {"i": Fraction(1, 9), "j": Fraction(6, 9), "k": Fraction(2, 9)}


def test_weights_without_delegators():
    instance = parse_v1("a: b\nb: a\ncasting: x y\n")
    vector = weights(instance, BFD_RULE.resolve(instance))
    assert _named(instance, vector) == {"x": Fraction(1, 2), "y": Fraction(1, 2)}


def test_majority_outcome(fig1):
    vector = weights(fig1, BFD_RULE.resolve(fig1))
    i, j, k = (fig1.id_of(name) for name in "ijk")
    assert majority_outcome(vector, {i: 1, j: 1, k: 0}) == 1
    assert majority_outcome(vector, {i: 1, j: 0, k: 0}) == 0
    even = parse_v1("a: x\ncasting: x y z\n")
    even_vector = weights(even, BFD_RULE.resolve(even))
    ballots = {even.id_of("x"): 1, even.id_of("y"): 0, even.id_of("z"): 0}
    assert majority_outcome(even_vector, ballots) == Fraction(1, 2)


@pytest.mark.parametrize("rule", CONFLUENT_RULES, ids=lambda rule: rule.name)
def test_guru_participation_on_fig1(fig1, rule):
    for v in rule.resolve(fig1).voters():
        assert check_guru_participation(rule, fig1, v) is None, fig1.name(v)


def test_guru_participation_requires_a_delegating_voter(fig1, ids):
    with pytest.raises(PreconditionUnmet):
        check_guru_participation(BFD_RULE, fig1, ids["g"])


def test_dfd_guru_fixture(dfd_guru):
    v = dfd_guru.id_of("v")
    violation = check_guru_participation(DFD_RULE, dfd_guru, v)
    assert violation is not None
    assert violation.voter == v
    assert "u" in violation.detail
    for rule in CONFLUENT_RULES:
        assert check_guru_participation(rule, dfd_guru, v) is None


def test_guru_participation_star_on_dfd_fixture(dfd_guru):
    v = dfd_guru.id_of("v")
    ballots = {dfd_guru.id_of("c"): 1, dfd_guru.id_of("u"): 0}
    assert check_guru_participation_star(DFD_RULE, dfd_guru, v, ballots) is not None
    assert check_guru_participation_star(BFD_RULE, dfd_guru, v, ballots) is None


def test_guru_participation_star_needs_every_ballot(dfd_guru):
    with pytest.raises(PreconditionUnmet):
        check_guru_participation_star(BFD_RULE, dfd_guru, dfd_guru.id_of("v"), {dfd_guru.id_of("c"): 1})


def test_search_adversarial_ballots(dfd_guru):
    v = dfd_guru.id_of("v")
    found = search_adversarial_ballots(DFD_RULE, dfd_guru, v)
    assert found == {dfd_guru.id_of("c"): 1, dfd_guru.id_of("u"): 0}
    assert search_adversarial_ballots(BFD_RULE, dfd_guru, v) is None


def test_copy_ring_fixture(copy_ring):
    u = copy_ring.id_of("u")
    violation = check_copy_robustness(BFD_RULE, copy_ring, u)
    assert violation is not None
    assert "s holds 1/2 before" in violation.detail
    assert "= 1/4 + 1/2 = 3/4" in violation.detail


def test_copy_ring_passes_for_borda(copy_ring):
    assert check_copy_robustness(BORDA_RULE, copy_ring, copy_ring.id_of("u")) is None


def test_copy_robustness_needs_a_direct_delegation(copy_ring):
    with pytest.raises(PreconditionUnmet):
        check_copy_robustness(DFD_RULE, copy_ring, copy_ring.id_of("u"))


def test_copy_robustness_on_star(star):
    assert check_copy_robustness(BFD_RULE, star, star.id_of("x")) is None


@pytest.mark.parametrize("fixture", [f for f in FIXTURES if f.axiom is not None], ids=lambda f: f.name)
def test_fixtures_violate_exactly_for_listed_rules(fixture):
    for rule in SHIPPED_RULES:
        try:
            violation = check_fixture(rule, fixture)
        except PreconditionUnmet:
            assert rule.name not in fixture.violating_rules
            continue
        assert (violation is not None) == (rule.name in fixture.violating_rules), rule.name


def test_check_fixtures_collects_violations():
    assert len(check_fixtures(BFD_RULE, AxiomKind.COPY)) == 1
    assert check_fixtures(BFD_RULE, AxiomKind.GURU) == []
    assert len(check_fixtures(DFD_RULE, AxiomKind.GURU)) == 1
    assert check_fixtures(DFD_RULE, AxiomKind.COPY) == []


def test_get_fixture_unknown():
    with pytest.raises(KeyError):
        get_fixture("nope")


@pytest.mark.parametrize("rule", SHIPPED_RULES, ids=lambda rule: rule.name)
def test_iic_on_fig1(fig1, rule):
    assert check_iic(rule, fig1) is None


def test_iic_without_delegators():
    instance = parse_v1("casting: c\n")
    assert check_iic(BORDA_RULE, instance) is None


@pytest.mark.parametrize("rule", CONFLUENT_RULES, ids=lambda rule: rule.name)
def test_confluent_rules_pass_guru_participation(rule):
    report = run_axiom_trials(rule, AxiomKind.GURU, trials=200, seed=1)
    assert report.trials == 200
    assert report.passed, report.violations[0].detail if report.violations else ""


def test_guru_participation_star_trials_pass_for_leximax():
    report = run_axiom_trials(parse_rule("leximax"), AxiomKind.GURU_STAR, trials=200, seed=2)
    assert report.passed


@pytest.mark.parametrize("rule", [DFD_RULE, BORDA_RULE], ids=lambda rule: rule.name)
def test_copy_robust_rules_pass_trials(rule):
    report = run_axiom_trials(rule, AxiomKind.COPY, trials=200, seed=3)
    assert report.passed


@pytest.mark.parametrize("rule", SHIPPED_RULES, ids=lambda rule: rule.name)
def test_iic_trials(rule):
    assert run_axiom_trials(rule, AxiomKind.IIC, trials=100, seed=4).passed


def test_randomized_search_finds_dfd_violation():
    violation = search_counterexample(DFD_RULE, AxiomKind.GURU, seed=0, max_trials=5_000)
    assert violation is not None
    assert check_guru_participation(DFD_RULE, violation.instance, violation.voter) is not None


def test_trials_are_reproducible():
    first = run_axiom_trials(BFD_RULE, AxiomKind.COPY, trials=100, seed=9)
    second = run_axiom_trials(BFD_RULE, AxiomKind.COPY, trials=100, seed=9)
    assert [v.detail for v in first.violations] == [v.detail for v in second.violations]


def test_report_merge_and_json():
    first = run_axiom_trials(BFD_RULE, AxiomKind.GURU, trials=10, seed=1)
    second = run_axiom_trials(BFD_RULE, AxiomKind.GURU, trials=15, seed=2)
    merged = first.merge(second)
    assert merged.trials == 25
    data = json.loads(json.dumps(merged.to_dict()))
    assert data["axiom"] == "guru"
    assert data["rule"] == "bfd"
    with pytest.raises(ValueError):
        merged.merge(AxiomReport("copy", "bfd"))


def test_archive_counterexample(tmp_path, copy_ring):
    violation = check_copy_robustness(BFD_RULE, copy_ring, copy_ring.id_of("u"))
    path = archive_counterexample(violation, BFD_RULE, AxiomKind.COPY, directory=str(tmp_path))
    assert path.endswith("copy_bfd.txt")
    with open(path) as handle:
        text = handle.read()
    assert "# axiom: copy" in text
    assert "# voter: u" in text
    reloaded = load_instance(path)
    assert check_copy_robustness(BFD_RULE, reloaded, reloaded.id_of("u")) is not None


def test_property_matrix_columns():
    frame = property_matrix([BFD_RULE, BORDA_RULE], trials=20, seed=0)
    assert list(frame.columns) == MATRIX_COLUMNS
    rows = frame.set_index('rule')
    assert rows.loc['bfd', 'copy'] == "no"
    assert rows.loc['bfd', 'guru'] == "yes"
    assert rows.loc['bfd', 'rank_aware'] == "no"
    assert rows.loc['borda', 'strongly_lex'] == "-"
