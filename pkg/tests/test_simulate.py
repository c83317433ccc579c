"""Tests for the simulated-respondent pipeline."""

import json

import pytest

from omvkit.scoring import aggregate, overall_error, score
from omvkit.simulate import (
    DEFAULT_NOISE,
    NoiseModel,
    load_noise,
    respond_hybrid,
    responses_from_jsonl,
    responses_to_jsonl,
    simulate,
)

ORACLE = NoiseModel(mantissa_sigma=0.0, exponent_flip_prob=0.0)


def test_oracle_respondent_has_zero_error():
    records = simulate("facet", 4, ORACLE, seed=3)
    assert len(records) == 4 * 28
    assert all(score(r).log_rel_abs == 0.0 for r in records)


def test_always_up_flip_gives_exact_decade_error_on_value_trials():
    noise = NoiseModel(mantissa_sigma=0.0, exponent_flip_prob=1.0,
                       flip_direction="up")
    records = simulate("log", 3, noise, seed=5)
    value_errors = [score(r).log_rel_abs for r in records
                    if r.trial.task == "value"]
    assert value_errors and all(e == pytest.approx(1.0) for e in value_errors)


def test_simulation_deterministic():
    a = simulate("eplusm", 2, DEFAULT_NOISE["eplusm"], seed=11)
    b = simulate("eplusm", 2, DEFAULT_NOISE["eplusm"], seed=11)
    assert responses_to_jsonl(a) == responses_to_jsonl(b)
    c = simulate("eplusm", 2, DEFAULT_NOISE["eplusm"], seed=12)
    assert responses_to_jsonl(a) != responses_to_jsonl(c)


def test_designs_share_datasets_per_seed():
    a = simulate("facet", 2, ORACLE, seed=11)
    b = simulate("log", 2, ORACLE, seed=11)
    assert [r.trial for r in a] == [r.trial for r in b]


def test_noisier_design_scores_worse():
    quiet = NoiseModel(mantissa_sigma=0.1, exponent_flip_prob=0.02)
    loud = NoiseModel(mantissa_sigma=0.1, exponent_flip_prob=0.2)
    records = simulate("facet", 26, quiet, seed=1) + simulate("log", 26, loud, seed=1)
    summaries = aggregate(records)
    assert overall_error(summaries, "facet") < overall_error(summaries, "log")


def test_time_and_confidence_ranges():
    for r in simulate("ssb", 3, DEFAULT_NOISE["ssb"], seed=9):
        assert 0 < r.time_s <= 90.0
        assert 1 <= r.confidence <= 5


def test_respond_hybrid_zero_and_clamp():
    assert respond_hybrid(0.2) == 0.0
    assert respond_hybrid(0.7) == 1.0
    assert respond_hybrid(5.0e12) == 999e9
    assert respond_hybrid(8.47e6) == 8.47e6


def test_respond_hybrid_count_rounding():
    assert respond_hybrid(8.449e6, count_decimals=2) == pytest.approx(8.45e6)
    assert respond_hybrid(8.449e6, count_decimals=0) == pytest.approx(8e6)
    assert respond_hybrid(84_700.0, count_decimals=1) == pytest.approx(84.7e3)


def test_responses_jsonl_roundtrip():
    records = simulate("lin", 2, DEFAULT_NOISE["lin"], seed=21)
    text = responses_to_jsonl(records)
    back = responses_from_jsonl(text)
    assert back == records
    for line in text.strip().splitlines():
        json.loads(line)


def test_load_noise_flat_and_keyed():
    flat = load_noise('{"mantissa_sigma": 0.3, "exponent_flip_prob": 0.1}', "log")
    assert flat.mantissa_sigma == 0.3
    keyed = load_noise(
        '{"log": {"exponent_flip_prob": 0.2}, "default": {"exponent_flip_prob": 0.01}}',
        "log",
    )
    assert keyed.exponent_flip_prob == 0.2
    fallback = load_noise(
        '{"log": {"exponent_flip_prob": 0.2}, "default": {"exponent_flip_prob": 0.01}}',
        "facet",
    )
    assert fallback.exponent_flip_prob == 0.01
    with pytest.raises(ValueError):
        load_noise('{"bogus_field": 1}', "log")


def test_noise_model_validation():
    with pytest.raises(ValueError):
        NoiseModel(flip_direction="sideways")
    with pytest.raises(ValueError):
        NoiseModel(ratio_convention="upside-down")
    with pytest.raises(ValueError):
        simulate("sunburst", 2, ORACLE, seed=0)
    with pytest.raises(ValueError):
        simulate("facet", 0, ORACLE, seed=0)
