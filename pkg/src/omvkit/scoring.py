"""Error measures, per-task aggregation, and bootstrap confidence intervals.

Two relative error measures are computed per response.  The absolute
relative error |1 - response/correct| is asymmetric: answering 10 for a
correct 100 scores 0.9, answering 100 for a correct 10 scores 9.  The
absolute log relative error |log10(response/correct)| is symmetric and is
the measure the aggregation pipeline analyzes; a response off by exactly
one decade scores 1.0, and zero responses are substituted with 1 before
taking the log.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .data import stream, _BOOTSTRAP
from .errors import MissingTrials, TooFewSamples
from .trials import BLOCKS, TRIALS_PER_TASK

#: Additive shift that keeps the geometric mean defined when a participant's
#: median error is exactly zero; subtracted back out after averaging.
GEOMEAN_EPSILON = 1e-6

STATISTICS = ("geomean", "mean")


@dataclass(frozen=True)
class ErrorScore:
    abs_rel: float
    log_rel_abs: float


def score_response(response: float, correct: float) -> ErrorScore:
    """Both error measures for one answer against its correct value."""
    if not correct > 0:
        raise ValueError("correct value must be positive")
    if response < 0:
        raise ValueError("responses are non-negative")
    effective = 1.0 if response == 0 else response
    return ErrorScore(
        abs_rel=abs(1.0 - response / correct),
        log_rel_abs=abs(math.log10(effective / correct)),
    )


def score(record) -> ErrorScore:
    """Score a response record carrying its trial (see :mod:`omvkit.simulate`)."""
    return score_response(record.response, record.trial.correct)


def geomean_shifted(values: Sequence[float], epsilon: float = GEOMEAN_EPSILON) -> float:
    """Geometric mean after an additive epsilon shift, shifted back."""
    arr = np.asarray(values, dtype=float)
    if arr.size == 0:
        raise ValueError("geometric mean of nothing")
    if np.any(arr + epsilon <= 0):
        raise ValueError("values must be > -epsilon")
    return float(np.exp(np.mean(np.log(arr + epsilon))) - epsilon)


def geomean(values: Sequence[float]) -> float:
    """Plain geometric mean of strictly positive values."""
    arr = np.asarray(values, dtype=float)
    if np.any(arr <= 0):
        raise ValueError("geometric mean needs positive values")
    return float(np.exp(np.mean(np.log(arr))))


@dataclass(frozen=True)
class TaskSummary:
    """Cross-participant aggregate for one (design, task block)."""

    design: str
    block: str
    n_participants: int
    error_geomean: float
    time_geomean: float
    confidence_mean: float
    # per-participant statistics, the resampling units for CIs
    error_medians: tuple[float, ...]
    time_geomeans: tuple[float, ...]
    confidence_means: tuple[float, ...]


def aggregate(records: Iterable) -> list[TaskSummary]:
    """Per (design, block): median error per participant, then geometric mean
    across participants; geometric-mean times; mean confidence."""
    grouped: dict[tuple[str, str], dict[int, list]] = {}
    for r in records:
        block = r.trial.block
        grouped.setdefault((r.design, block), {}).setdefault(r.participant, []).append(r)

    block_order = {b[0] if b[1] == "none" else f"{b[0]}-{b[1]}": i for i, b in enumerate(BLOCKS)}
    summaries = []
    for (design, block) in sorted(grouped, key=lambda k: (k[0], block_order.get(k[1], 99))):
        per_participant = grouped[(design, block)]
        medians, times, confs = [], [], []
        for participant in sorted(per_participant):
            rs = per_participant[participant]
            if len(rs) != TRIALS_PER_TASK:
                raise MissingTrials(
                    f"participant {participant} has {len(rs)} trials for "
                    f"{design}/{block}, expected {TRIALS_PER_TASK}"
                )
            errors = [score(r).log_rel_abs for r in rs]
            medians.append(float(np.median(errors)))
            times.append(geomean([r.time_s for r in rs]))
            confs.append(float(np.mean([r.confidence for r in rs])))
        summaries.append(
            TaskSummary(
                design=design,
                block=block,
                n_participants=len(medians),
                error_geomean=geomean_shifted(medians),
                time_geomean=geomean(times),
                confidence_mean=float(np.mean(confs)),
                error_medians=tuple(medians),
                time_geomeans=tuple(times),
                confidence_means=tuple(confs),
            )
        )
    return summaries


def overall_error(summaries: list[TaskSummary], design: str) -> float:
    """One number per design: geometric mean of its per-block error aggregates."""
    values = [s.error_geomean for s in summaries if s.design == design]
    if not values:
        raise ValueError(f"no summaries for design {design!r}")
    return geomean_shifted(values)


def bootstrap_ci(
    samples: Sequence[float],
    statistic: str = "geomean",
    level: float = 0.95,
    reps: int = 10_000,
    seed: int = 0,
) -> tuple[float, float]:
    """Percentile bootstrap interval for the statistic; deterministic from seed."""
    arr = np.asarray(samples, dtype=float)
    if arr.size < 2:
        raise TooFewSamples(f"need at least 2 samples, got {arr.size}")
    if reps < 1000:
        raise ValueError("reps must be >= 1000")
    if statistic not in STATISTICS:
        raise ValueError(f"unknown statistic {statistic!r}")
    if not 0 < level < 1:
        raise ValueError("level must be in (0, 1)")
    rng = stream(seed, _BOOTSTRAP)
    idx = rng.integers(0, arr.size, size=(reps, arr.size))
    if statistic == "mean":
        stats = arr[idx].mean(axis=1)
    else:
        shifted = np.log(arr + GEOMEAN_EPSILON)
        stats = np.exp(shifted[idx].mean(axis=1)) - GEOMEAN_EPSILON
    alpha = (1.0 - level) / 2.0
    lo, hi = np.quantile(stats, [alpha, 1.0 - alpha])
    return float(lo), float(hi)


@dataclass(frozen=True)
class ReportRow:
    design: str
    block: str
    statistic: str
    point: float
    lo: float
    hi: float


def analysis_report(
    summaries: list[TaskSummary], reps: int = 10_000, seed: int = 0
) -> list[ReportRow]:
    """CI-annotated report rows for every (design, block, statistic)."""
    rows = []
    for s in summaries:
        for statistic, point, samples, kind in (
            ("error", s.error_geomean, s.error_medians, "geomean"),
            ("time", s.time_geomean, s.time_geomeans, "geomean"),
            ("confidence", s.confidence_mean, s.confidence_means, "mean"),
        ):
            lo, hi = bootstrap_ci(samples, statistic=kind, reps=reps, seed=seed)
            rows.append(ReportRow(s.design, s.block, statistic, point, lo, hi))
    return rows


def report_to_csv(rows: list[ReportRow]) -> str:
    lines = ["design,task,statistic,point,lo,hi"]
    for r in rows:
        lines.append(
            f"{r.design},{r.block},{r.statistic},{r.point!r},{r.lo!r},{r.hi!r}"
        )
    return "\n".join(lines) + "\n"
