"""Simulated respondents that exercise the full analysis pipeline.

A respondent reads each highlighted value off the chart: the mantissa with
truncated Gaussian read noise, the exponent with a small probability of
landing one decade off.  Answers for value and difference questions are
composed in the count-plus-unit input granularity (clamped to what the
k/M/B schema can express); ratio answers are unitless decimals.  All draws
are deterministic from (root seed, design, participant).

The noise magnitudes are illustrative stand-ins for human behavior, not
reproductions of any measured effect.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, fields
from typing import Iterable

import numpy as np

from .core import decompose, round_half_away
from .data import gen_dataset, stream, _RESPONSES
from .render import DESIGNS
from .trials import RATIO_CONVENTIONS, TrialSpec, build_trials

#: Largest value the answer widget can express: 999 B.
HYBRID_MAX = 999e9
#: Below this, an answer rounds down to an entered 0.
HYBRID_ZERO = 0.5

TRIAL_TIME_LIMIT_S = 90.0

_FLIP_DIRECTIONS = ("both", "up", "down")


@dataclass(frozen=True)
class NoiseModel:
    mantissa_sigma: float = 0.15
    exponent_flip_prob: float = 0.05
    flip_direction: str = "both"
    time_log_mean: float = math.log(14.0)
    time_log_sigma: float = 0.45
    confidence_mean: float = 3.8
    confidence_sigma: float = 0.7
    count_decimals: int | None = None  # None: answers keep full precision
    ratio_convention: str = "larger"

    def __post_init__(self):
        if self.flip_direction not in _FLIP_DIRECTIONS:
            raise ValueError(f"unknown flip direction {self.flip_direction!r}")
        if self.ratio_convention not in RATIO_CONVENTIONS:
            raise ValueError(f"unknown ratio convention {self.ratio_convention!r}")

    @classmethod
    def from_dict(cls, obj: dict) -> "NoiseModel":
        known = {f.name for f in fields(cls)}
        unknown = set(obj) - known
        if unknown:
            raise ValueError(f"unknown noise parameters: {sorted(unknown)}")
        return cls(**obj)


#: Illustrative per-design defaults: harder designs read noisier.
DEFAULT_NOISE: dict[str, NoiseModel] = {
    "lin": NoiseModel(mantissa_sigma=0.9, exponent_flip_prob=0.25),
    "log": NoiseModel(mantissa_sigma=0.5, exponent_flip_prob=0.08),
    "ssb": NoiseModel(mantissa_sigma=0.3, exponent_flip_prob=0.05),
    "eplusm": NoiseModel(mantissa_sigma=0.25, exponent_flip_prob=0.03),
    "facet": NoiseModel(mantissa_sigma=0.25, exponent_flip_prob=0.03),
}


def load_noise(text: str, design: str) -> NoiseModel:
    """Noise parameters from JSON: either flat, or keyed by design name."""
    obj = json.loads(text)
    if not isinstance(obj, dict):
        raise ValueError("noise file must hold a JSON object")
    if obj and all(isinstance(v, dict) for v in obj.values()):
        chosen = obj.get(design, obj.get("default"))
        if chosen is None:
            raise ValueError(f"noise file has no entry for {design!r} and no default")
        return NoiseModel.from_dict(chosen)
    return NoiseModel.from_dict(obj)


@dataclass(frozen=True)
class ResponseRecord:
    design: str
    participant: int
    trial_index: int
    trial: TrialSpec
    response: float
    time_s: float
    confidence: int


def respond_hybrid(value: float, count_decimals: int | None = None) -> float:
    """Clamp an intended answer into count-plus-unit granularity."""
    if value < HYBRID_ZERO:
        return 0.0
    value = min(max(value, 1.0), HYBRID_MAX)
    if count_decimals is None:
        return value
    for multiplier in (1e9, 1e6, 1e3, 1.0):
        if value >= multiplier:
            count = round_half_away(value / multiplier, count_decimals)
            return min(count * multiplier, HYBRID_MAX)
    return 1.0


def _read_value(value: float, noise: NoiseModel, rng: np.random.Generator) -> float:
    """One glance at a bar: noisy mantissa, occasionally misread exponent."""
    omv = decompose(value)
    m, e = omv.mantissa, omv.exponent
    if noise.mantissa_sigma > 0:
        for _ in range(100):
            candidate = m + rng.normal(0.0, noise.mantissa_sigma)
            if 1.0 <= candidate < 10.0:
                m = candidate
                break
        else:
            m = min(max(m, 1.0), math.nextafter(10.0, 1.0))
    if noise.exponent_flip_prob > 0 and rng.random() < noise.exponent_flip_prob:
        if noise.flip_direction == "up":
            e += 1
        elif noise.flip_direction == "down":
            e -= 1
        else:
            e += 1 if rng.random() < 0.5 else -1
    return m * 10.0**e


def simulate(
    design: str,
    participants: int,
    noise: NoiseModel | None = None,
    seed: int = 0,
) -> list[ResponseRecord]:
    """Responses of ``participants`` simulated respondents on one design.

    Each participant gets their own dataset and trial sequence, shared
    across designs for a given seed so designs differ only through noise.
    """
    if design not in DESIGNS:
        raise ValueError(f"unknown design {design!r}")
    if participants < 1:
        raise ValueError("participants must be >= 1")
    if noise is None:
        noise = DEFAULT_NOISE[design]
    design_code = DESIGNS.index(design)
    records = []
    for p in range(participants):
        dataset = gen_dataset(p, seed)
        trials = build_trials(dataset, seed, ratio_convention=noise.ratio_convention)
        rng = stream(seed, _RESPONSES, design_code, p)
        for i, trial in enumerate(trials):
            reads = [
                _read_value(dataset.value_of(label), noise, rng)
                for label in trial.targets
            ]
            if trial.task == "value":
                response = respond_hybrid(reads[0], noise.count_decimals)
            elif trial.task == "difference":
                response = respond_hybrid(abs(reads[0] - reads[1]), noise.count_decimals)
            elif noise.ratio_convention == "larger":
                response = max(reads) / min(reads)
            else:
                response = reads[0] / reads[1]
            time_s = float(
                min(max(rng.lognormal(noise.time_log_mean, noise.time_log_sigma), 1.0),
                    TRIAL_TIME_LIMIT_S)
            )
            confidence = int(
                min(max(round_half_away(rng.normal(noise.confidence_mean,
                                                   noise.confidence_sigma)), 1), 5)
            )
            records.append(
                ResponseRecord(design, p, i, trial, response, time_s, confidence)
            )
    return records


def responses_to_jsonl(records: Iterable[ResponseRecord]) -> str:
    lines = []
    for r in records:
        lines.append(
            json.dumps(
                {
                    "design": r.design,
                    "participant": r.participant,
                    "trial": r.trial_index,
                    "task": r.trial.task,
                    "relation": r.trial.relation,
                    "targets": list(r.trial.targets),
                    "correct": r.trial.correct,
                    "response": r.response,
                    "time_s": r.time_s,
                    "confidence": r.confidence,
                },
                sort_keys=True,
            )
        )
    return "\n".join(lines) + "\n"


def responses_from_jsonl(
    text: str, trials: list[TrialSpec] | None = None
) -> list[ResponseRecord]:
    """Parse response records; rows lacking an embedded trial join on
    their trial index against ``trials``."""
    records = []
    for line in text.strip().splitlines():
        if not line.strip():
            continue
        obj = json.loads(line)
        index = int(obj["trial"])
        if "correct" in obj:
            trial = TrialSpec(
                obj["task"], obj["relation"], tuple(obj["targets"]), obj["correct"]
            )
        elif trials is not None:
            trial = trials[index]
        else:
            raise ValueError(
                "response rows carry no trial fields; a trials file is required"
            )
        records.append(
            ResponseRecord(
                design=obj.get("design", "unknown"),
                participant=int(obj["participant"]),
                trial_index=index,
                trial=trial,
                response=float(obj["response"]),
                time_s=float(obj["time_s"]),
                confidence=int(obj["confidence"]),
            )
        )
    return records
