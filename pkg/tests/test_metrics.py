from fractions import Fraction

import pytest

from utils.errors import NonConfluentMetrics
from utils.instance_load import parse_v1
from utils.metrics import (
    METRIC_COLUMNS,
    MetricsRecord,
    aggregate,
    compute_metrics,
    frame_to_csv,
    metrics_for_rule,
    metrics_frame,
)
from utils.resolver import BFD_RULE, BORDA_RULE, DFD_RULE, DIFFUSION_RULE, MINSUM_RULE


def test_minsum_metrics_fig1(fig1):
    _, record = metrics_for_rule(fig1, MINSUM_RULE)
    assert record.max_rank == 4
    assert record.max_len == 4
    assert record.avg_len == Fraction(5, 2)
    assert record.max_sum == 5
    assert record.max_weight == Fraction(2, 3)
    assert record.avg_rank == Fraction(5, 3)


def test_bfd_metrics_fig1(fig1):
    _, record = metrics_for_rule(fig1, BFD_RULE)
    assert record.max_len == 3
    assert record.avg_len == Fraction(5, 3)
    assert record.max_sum == 6
    assert record.max_weight == Fraction(4, 9)
    assert record.avg_rank == Fraction(13, 6)
    assert record.unpop > 0


def test_diffusion_max_weight_fig1(fig1):
    _, record = metrics_for_rule(fig1, DIFFUSION_RULE)
    assert record.max_weight == Fraction(7, 9)


def test_borda_avg_rank_fig1(fig1):
    _, record = metrics_for_rule(fig1, BORDA_RULE)
    assert record.avg_rank == Fraction(7, 6)
    assert record.unpop >= 0


def test_dfd_has_no_branching_metrics(fig1):
    res, record = metrics_for_rule(fig1, DFD_RULE)
    assert record.avg_rank is None
    assert record.unpop is None
    assert record.max_len == 6
    with pytest.raises(NonConfluentMetrics):
        compute_metrics(fig1, res)


def test_single_delegator():
    instance = parse_v1("v: c\ncasting: c\n")
    _, record = metrics_for_rule(instance, BFD_RULE)
    assert record == MetricsRecord(1, 1, Fraction(1), 1, Fraction(1), Fraction(1), Fraction(0))


def test_no_delegators():
    instance = parse_v1("casting: x y\n")
    _, record = metrics_for_rule(instance, BORDA_RULE)
    assert record.max_len == 0
    assert record.max_weight == Fraction(1, 2)
    assert record.unpop == 0


def test_aggregate():
    first = MetricsRecord(2, 3, Fraction(1), 4, Fraction(1, 2), Fraction(1), Fraction(0))
    second = MetricsRecord(4, 1, Fraction(2), 2, Fraction(1, 4), None, None)
    mean = aggregate([first, second])
    assert mean.max_rank == 3
    assert mean.avg_len == Fraction(3, 2)
    assert mean.max_weight == Fraction(3, 8)
    assert mean.avg_rank == 1
    assert mean.unpop == 0


def test_aggregate_all_missing():
    record = MetricsRecord(1, 1, Fraction(1), 1, Fraction(1))
    assert aggregate([record, record]).avg_rank is None


def test_aggregate_empty():
    with pytest.raises(ValueError):
        aggregate([])


def test_csv_output(fig1):
    rows = [("fig1", rule.name, metrics_for_rule(fig1, rule)[1]) for rule in (MINSUM_RULE, DFD_RULE)]
    text = frame_to_csv(metrics_frame(rows))
    lines = text.splitlines()
    assert lines[0] == "instance,rule," + ",".join(METRIC_COLUMNS)
    assert lines[1].startswith("fig1,minsum,4,4,2.5,5,0.666667,1.66667,")
    assert lines[2].endswith(",,")


def test_metrics_frame_index_name(fig1):
    _, record = metrics_for_rule(fig1, BFD_RULE)
    frame = metrics_frame([(3, "bfd", record)], index_name="instances")
    assert list(frame.columns)[:2] == ["instances", "rule"]
    assert frame.loc[0, "max_weight"] == pytest.approx(4 / 9)
