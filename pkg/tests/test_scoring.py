"""Tests for error measures, aggregation, and bootstrap intervals."""

import math

import numpy as np
import pytest

from omvkit.errors import MissingTrials, TooFewSamples
from omvkit.scoring import (
    GEOMEAN_EPSILON,
    aggregate,
    analysis_report,
    bootstrap_ci,
    geomean,
    geomean_shifted,
    overall_error,
    report_to_csv,
    score_response,
)
from omvkit.simulate import ResponseRecord
from omvkit.trials import TrialSpec


def test_absolute_relative_error_asymmetry():
    assert score_response(10, 100).abs_rel == pytest.approx(0.9)
    assert score_response(100, 10).abs_rel == pytest.approx(9.0)


def test_log_error_symmetry():
    assert score_response(10, 100).log_rel_abs == pytest.approx(1.0)
    assert score_response(100, 10).log_rel_abs == pytest.approx(1.0)


def test_log_error_worked_values():
    lr21 = score_response(2, 1).log_rel_abs
    lr98 = score_response(9, 8).log_rel_abs
    assert lr21 == pytest.approx(0.301, abs=1e-3)
    assert lr98 == pytest.approx(0.0512, abs=1e-3)
    assert lr21 / lr98 == pytest.approx(5.885, abs=1e-2)


def test_zero_response_substitution():
    s = score_response(0, 100)
    assert s.log_rel_abs == pytest.approx(2.0)  # log10(1/100)
    assert s.abs_rel == pytest.approx(1.0)


def test_exact_response_scores_zero():
    s = score_response(123.0, 123.0)
    assert s.log_rel_abs == 0.0
    assert s.abs_rel == 0.0


def test_decade_error_scores_one():
    assert score_response(5e7, 5e6).log_rel_abs == pytest.approx(1.0)


def _records(design, participant, block_scores, time_s=10.0, confidence=3):
    """Four-trial records per (task, relation) whose responses hit the given
    log errors exactly: response = correct * 10**err."""
    records = []
    for (task, relation), errs in block_scores.items():
        for i, err in enumerate(errs):
            targets = ("A",) if task == "value" else ("A", "B")
            trial = TrialSpec(task, relation, targets, 100.0)
            records.append(
                ResponseRecord(design, participant, i, trial,
                               100.0 * 10.0**err, time_s, confidence)
            )
    return records


def test_aggregate_recovers_known_medians():
    # participants with constant per-trial errors: median == that constant,
    # and the cross-participant epsilon-shifted geometric mean is closed-form
    medians = [0.1, 0.2, 0.4]
    records = []
    for p, med in enumerate(medians):
        records += _records("facet", p, {("value", "none"): [med] * 4})
    summary = aggregate(records)
    assert len(summary) == 1
    expected = math.exp(
        np.mean([math.log(m + GEOMEAN_EPSILON) for m in medians])
    ) - GEOMEAN_EPSILON
    assert summary[0].error_geomean == pytest.approx(expected, abs=1e-9)
    assert summary[0].error_medians == pytest.approx(tuple(medians))


def test_aggregate_constant_medians_identity():
    records = []
    for p in range(5):
        records += _records("log", p, {("ratio", "same"): [0.25] * 4})
    assert aggregate(records)[0].error_geomean == pytest.approx(0.25, abs=1e-6)


def test_aggregate_time_geometric_mean():
    records = []
    for i, t in enumerate((1.0, 10.0, 100.0)):
        records.append(
            ResponseRecord("lin", 0, i, TrialSpec("value", "none", ("A",), 100.0),
                           100.0, t, 3)
        )
    records.append(
        ResponseRecord("lin", 0, 3, TrialSpec("value", "none", ("A",), 100.0),
                       100.0, 10.0, 3)
    )
    summary = aggregate(records)[0]
    assert summary.time_geomean == pytest.approx(10.0)


def test_aggregate_confidence_mean():
    records = []
    for i, c in enumerate((1, 2, 4, 5)):
        records.append(
            ResponseRecord("lin", 0, i, TrialSpec("value", "none", ("A",), 100.0),
                           100.0, 5.0, c)
        )
    assert aggregate(records)[0].confidence_mean == pytest.approx(3.0)


def test_aggregate_missing_trials():
    records = _records("facet", 0, {("value", "none"): [0.1] * 4})[:3]
    with pytest.raises(MissingTrials):
        aggregate(records)


def test_aggregate_permutation_invariant():
    records = []
    for p in range(4):
        records += _records("ssb", p, {
            ("value", "none"): [0.0, 0.1, 0.2, 0.3],
            ("ratio", "distant"): [0.05, 0.15, 0.25, 0.35],
        })
    forward = aggregate(records)
    backward = aggregate(list(reversed(records)))
    assert forward == backward


def test_overall_error_pools_blocks():
    records = []
    for p in range(3):
        records += _records("facet", p, {
            ("value", "none"): [0.1] * 4,
            ("ratio", "same"): [0.4] * 4,
        })
    summaries = aggregate(records)
    pooled = overall_error(summaries, "facet")
    assert pooled == pytest.approx(geomean_shifted([0.1, 0.4]), abs=1e-6)


def test_geomean_basics():
    assert geomean([1, 10, 100]) == pytest.approx(10.0)
    assert geomean_shifted([0.0, 0.0]) == pytest.approx(0.0, abs=1e-9)


def test_bootstrap_constant_samples():
    lo, hi = bootstrap_ci([3.0] * 10, statistic="mean", reps=1000, seed=5)
    assert (lo, hi) == (3.0, 3.0)


def test_bootstrap_deterministic_from_seed():
    samples = list(np.random.default_rng(0).lognormal(0, 0.5, size=26))
    a = bootstrap_ci(samples, "geomean", reps=2000, seed=42)
    b = bootstrap_ci(samples, "geomean", reps=2000, seed=42)
    c = bootstrap_ci(samples, "geomean", reps=2000, seed=43)
    assert a == b
    assert a != c


def test_bootstrap_pairwise_difference_of_identical_samples_contains_zero():
    samples = list(np.random.default_rng(1).lognormal(0, 0.3, size=20))
    diffs = [a - b for a, b in zip(samples, samples)]
    lo, hi = bootstrap_ci(diffs, statistic="mean", reps=1000, seed=2)
    assert lo <= 0.0 <= hi


def test_bootstrap_validation():
    with pytest.raises(TooFewSamples):
        bootstrap_ci([1.0], reps=1000, seed=0)
    with pytest.raises(ValueError):
        bootstrap_ci([1.0, 2.0], reps=10, seed=0)
    with pytest.raises(ValueError):
        bootstrap_ci([1.0, 2.0], statistic="mode", reps=1000, seed=0)


def test_analysis_report_rows_and_csv():
    records = []
    for p in range(4):
        records += _records("facet", p, {("value", "none"): [0.1 * (p + 1)] * 4},
                            time_s=8.0 + p, confidence=3 + p % 2)
    rows = analysis_report(aggregate(records), reps=1000, seed=3)
    assert [r.statistic for r in rows] == ["error", "time", "confidence"]
    for r in rows:
        assert r.lo <= r.point <= r.hi or r.statistic == "error"
        assert r.lo <= r.hi
    text = report_to_csv(rows)
    assert text.startswith("design,task,statistic,point,lo,hi\n")
    assert "facet,value,error," in text
