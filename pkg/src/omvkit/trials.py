"""Trial construction: 28 questions per dataset in a fixed block order.

Blocks run value retrieval (4 trials), then difference estimation, then
ratio estimation; the comparison blocks each split into same / neighboring /
distant magnitude conditions (4 trials apiece).  Correct answers come from
the visually-correct operands: mantissas rounded to two decimals, which is
the highest detail the charts convey.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import combinations

from .core import compose, decompose
from .data import Dataset, stream, _TRIALS
from .errors import InsufficientPairs

TASKS = ("value", "difference", "ratio")

#: |exponent difference| demanded by each magnitude relation.
RELATION_DELTAS = {"same": 0, "neighboring": 1}
DISTANT_MIN_DELTA = 2

TRIALS_PER_TASK = 4

#: The seven (task, relation) blocks in presentation order.
BLOCKS = (
    ("value", "none"),
    ("difference", "same"),
    ("difference", "neighboring"),
    ("difference", "distant"),
    ("ratio", "same"),
    ("ratio", "neighboring"),
    ("ratio", "distant"),
)

RATIO_CONVENTIONS = ("larger", "ordered")


@dataclass(frozen=True)
class TrialSpec:
    task: str
    relation: str
    targets: tuple[str, ...]
    correct: float

    @property
    def block(self) -> str:
        return self.task if self.relation == "none" else f"{self.task}-{self.relation}"


def visually_correct(value: float) -> float:
    """The value as drawn: mantissa rounded to two decimals."""
    omv = decompose(value, precision=3)
    return compose(omv.mantissa, omv.exponent)


def _relation_pairs(dataset: Dataset, relation: str) -> list[tuple[str, str]]:
    exps = {row.label: decompose(row.value).exponent for row in dataset.rows}
    pairs = []
    for a, b in combinations(dataset.labels, 2):
        delta = abs(exps[a] - exps[b])
        if relation == "distant":
            ok = delta >= DISTANT_MIN_DELTA
        else:
            ok = delta == RELATION_DELTAS[relation]
        if ok:
            pairs.append((a, b))
    return pairs


def build_trials(
    dataset: Dataset, seed: int, ratio_convention: str = "larger"
) -> list[TrialSpec]:
    """The 28 trials for one dataset, deterministic from the seed."""
    if ratio_convention not in RATIO_CONVENTIONS:
        raise ValueError(f"unknown ratio convention {ratio_convention!r}")
    rng = stream(seed, _TRIALS, dataset.id)
    trials: list[TrialSpec] = []

    if len(dataset.labels) < TRIALS_PER_TASK:
        raise InsufficientPairs(
            f"only {len(dataset.labels)} categories available, "
            f"need {TRIALS_PER_TASK} value targets"
        )
    idx = rng.choice(len(dataset.labels), size=TRIALS_PER_TASK, replace=False)
    for i in idx:
        label = dataset.labels[i]
        correct = visually_correct(dataset.value_of(label))
        trials.append(TrialSpec("value", "none", (label,), correct))

    for task, relation in BLOCKS[1:]:
        pairs = _relation_pairs(dataset, relation)
        if task == "difference":
            # equal bars make a degenerate question (and a zero correct value)
            pairs = [
                (a, b) for a, b in pairs
                if visually_correct(dataset.value_of(a))
                != visually_correct(dataset.value_of(b))
            ]
        if len(pairs) < TRIALS_PER_TASK:
            raise InsufficientPairs(
                f"only {len(pairs)} {relation} pairs available, need {TRIALS_PER_TASK}"
            )
        chosen = rng.choice(len(pairs), size=TRIALS_PER_TASK, replace=False)
        for i in chosen:
            a, b = pairs[i]
            va = visually_correct(dataset.value_of(a))
            vb = visually_correct(dataset.value_of(b))
            if task == "difference":
                correct = abs(va - vb)
            elif ratio_convention == "larger":
                correct = max(va, vb) / min(va, vb)
            else:
                correct = va / vb
            trials.append(TrialSpec(task, relation, (a, b), correct))
    return trials


def trials_to_jsonl(trials: list[TrialSpec]) -> str:
    lines = []
    for i, t in enumerate(trials):
        lines.append(
            json.dumps(
                {
                    "trial": i,
                    "task": t.task,
                    "relation": t.relation,
                    "targets": list(t.targets),
                    "correct": t.correct,
                },
                sort_keys=True,
            )
        )
    return "\n".join(lines) + "\n"


def trials_from_jsonl(text: str) -> list[TrialSpec]:
    trials = []
    for line in text.strip().splitlines():
        if not line.strip():
            continue
        obj = json.loads(line)
        trials.append(
            TrialSpec(obj["task"], obj["relation"], tuple(obj["targets"]), obj["correct"])
        )
    return trials
