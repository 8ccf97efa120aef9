"""Tests for instances, voter classification, reduction and path enumeration."""

import pytest

from utils.errors import InvalidInstance, PathBudgetExceeded
from utils.instance_load import parse_v1
from utils.model import (
    Instance,
    Path,
    RankedEdge,
    VoterClass,
    classify,
    delegating_voters,
    isolated_voters,
    paths_from,
    reduce,
    sequence_of,
)


def _names(instance, path):
    return tuple(instance.name(v) for v in path.voters())


def test_fig1_ids_follow_declaration_order(fig1):
    assert fig1.names == tuple("abcdefghijk")
    assert fig1.casting == frozenset({8, 9, 10})


def test_classify_fig1(fig1):
    classes = classify(fig1)
    by_name = {fig1.name(v): cls for v, cls in classes.items()}
    for name in "abcdef":
        assert by_name[name] is VoterClass.DELEGATING
    assert by_name["g"] is VoterClass.ISOLATED
    assert by_name["h"] is VoterClass.ISOLATED
    for name in "ijk":
        assert by_name[name] is VoterClass.CASTING


def test_classify_without_edges():
    instance = Instance.from_targets([[], [], []], [1])
    classes = classify(instance)
    assert classes == {0: VoterClass.ISOLATED, 1: VoterClass.CASTING, 2: VoterClass.ISOLATED}


def test_classify_direct_edge():
    instance = parse_v1("v: c\ncasting: c\n")
    assert classify(instance)[instance.id_of("v")] is VoterClass.DELEGATING


def test_classify_is_idempotent_under_reduction(fig1):
    reduced = reduce(fig1)
    assert isolated_voters(reduced) == []
    assert len(delegating_voters(reduced)) == len(delegating_voters(fig1))


def test_reduce_fig1_keeps_gappy_ranks(fig1):
    reduced = reduce(fig1)
    assert reduced.is_reduced
    assert "g" not in reduced.names and "h" not in reduced.names
    f = reduced.id_of("f")
    assert [(reduced.name(e.target), e.rank) for e in reduced.out_edges[f]] == [("e", 1), ("k", 4)]
    assert reduced.origin[f] == fig1.id_of("f")


def test_reduce_without_isolated_voters_changes_nothing(star):
    reduced = reduce(star)
    assert reduced.out_edges == star.out_edges
    assert reduced.names == star.names


def test_reduce_all_isolated_leaves_casting_only():
    instance = parse_v1("a: b\nb: a\ncasting: c\n")
    reduced = reduce(instance)
    assert reduced.names == ("c",)
    assert reduced.casting == frozenset({0})


def test_paths_from_d(fig1, ids):
    paths = {_names(fig1, p) for p in paths_from(fig1, ids["d"])}
    assert paths == {("d", "j"), ("d", "e", "b", "c", "i"), ("d", "e", "f", "k")}


def test_paths_from_isolated_is_empty(fig1, ids):
    assert paths_from(fig1, ids["g"]) == []


def test_paths_from_single_edge():
    instance = parse_v1("v: c\ncasting: c\n")
    paths = paths_from(instance, 0)
    assert len(paths) == 1
    assert sequence_of(paths[0]) == (1,)


def test_paths_from_rejects_casting_voter(fig1, ids):
    with pytest.raises(InvalidInstance):
        paths_from(fig1, ids["i"])


def test_paths_from_budget(fig1, ids):
    with pytest.raises(PathBudgetExceeded):
        paths_from(fig1, ids["d"], cap=2)


def test_sequence_of_examples(fig1, ids):
    by_names = {_names(fig1, p): sequence_of(p) for p in paths_from(fig1, ids["a"])}
    assert by_names[tuple("abcdefk")] == (1, 1, 1, 1, 2, 4)
    assert by_names[tuple("abci")] == (1, 1, 3)
    assert sequence_of(Path()) == ()


def test_every_delegating_voter_has_a_path(fig1):
    for v in delegating_voters(fig1):
        paths = paths_from(fig1, v)
        assert paths
        assert all(len(sequence_of(p)) == len(p) for p in paths)


def test_path_rejects_revisits():
    with pytest.raises(InvalidInstance):
        Path((RankedEdge(0, 1, 1), RankedEdge(1, 0, 1)))


def test_path_rejects_broken_chain():
    with pytest.raises(InvalidInstance):
        Path((RankedEdge(0, 1, 1), RankedEdge(2, 3, 1)))


def test_edge_invariants():
    with pytest.raises(InvalidInstance):
        RankedEdge(1, 1, 1)
    with pytest.raises(InvalidInstance):
        RankedEdge(0, 1, 0)


def test_instance_rejects_rank_gaps():
    edges = ((RankedEdge(0, 1, 2),), ())
    with pytest.raises(InvalidInstance):
        Instance(edges, frozenset({1}), ("a", "b"))


def test_instance_rejects_casting_with_edges():
    with pytest.raises(InvalidInstance):
        Instance.from_targets([[1], []], [0, 1])


def test_instance_rejects_duplicate_targets():
    with pytest.raises(InvalidInstance):
        Instance.from_targets([[1, 1], []], [1])


def test_edits_keep_ids(fig1, ids):
    promoted = fig1.promote_to_casting(ids["c"])
    assert promoted.is_casting(ids["c"])
    assert promoted.out_edges[ids["c"]] == ()
    extended = fig1.add_isolated_casting()
    assert extended.n == fig1.n + 1
    assert extended.names[:fig1.n] == fig1.names
    assert extended.is_casting(fig1.n)
    assert fig1.without_out_edges(ids["a"]).targets(ids["a"]) == []


def test_truncated_keeps_low_ranks(fig1, ids):
    assert fig1.truncated(1).targets(ids["f"]) == [ids["e"]]
    with pytest.raises(InvalidInstance):
        fig1.truncated(-1)
