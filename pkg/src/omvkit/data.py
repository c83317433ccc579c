"""Synthetic datasets: 14 categories, two per exponent level, seeded.

Every random draw in the package flows through :func:`stream`, which derives
an independent generator from (root seed, fixed path of integers).  Adding
new draw sites never perturbs existing streams.
"""

from __future__ import annotations

import io
from dataclasses import dataclass

import numpy as np

from .core import decompose

#: Exponent levels of the standard dataset: 10 thousand up to ~100 billion.
EXPONENT_LEVELS = tuple(range(4, 11))

LABELS = "ABCDEFGHIJKLMN"

# stream-path domain tags
_DATASET = 0
_TRIALS = 1
_RESPONSES = 2
_BOOTSTRAP = 3


def stream(root_seed: int, *path: int) -> np.random.Generator:
    """Independent generator for (root seed, path); deterministic everywhere."""
    seq = np.random.SeedSequence(entropy=int(root_seed), spawn_key=tuple(path))
    return np.random.Generator(np.random.PCG64(seq))


@dataclass(frozen=True)
class DataRow:
    label: str
    value: float


@dataclass(frozen=True)
class Dataset:
    id: int
    seed: int
    rows: tuple[DataRow, ...]

    def value_of(self, label: str) -> float:
        for row in self.rows:
            if row.label == label:
                return row.value
        raise KeyError(label)

    @property
    def labels(self) -> tuple[str, ...]:
        return tuple(r.label for r in self.rows)


def gen_dataset(index: int, seed: int) -> Dataset:
    """One 14-row dataset: two categories per exponent level, 2-decimal mantissas."""
    rng = stream(seed, _DATASET, index)
    exponents = np.repeat(EXPONENT_LEVELS, 2)
    exponents = exponents[rng.permutation(len(exponents))]
    # integer grid keeps the mantissa exactly uniform over {1.00, ..., 9.99}
    mantissas = rng.integers(100, 1000, size=len(LABELS)) / 100.0
    rows = tuple(
        DataRow(label, float(m) * 10.0 ** int(e))
        for label, m, e in zip(LABELS, mantissas, exponents)
    )
    return Dataset(id=index, seed=seed, rows=rows)


def gen_datasets(n: int, seed: int) -> list[Dataset]:
    """n statistically equivalent datasets, each from its own stream."""
    if n < 1:
        raise ValueError("n must be >= 1")
    return [gen_dataset(i, seed) for i in range(n)]


def sample_seven(dataset: Dataset) -> Dataset:
    """Reduce to one representative row per order of magnitude (for galleries)."""
    chosen = {}
    for row in dataset.rows:
        e = decompose(row.value).exponent
        chosen.setdefault(e, row)
    rows = tuple(chosen[e] for e in sorted(chosen))
    return Dataset(id=dataset.id, seed=dataset.seed, rows=rows)


def dataset_to_csv(dataset: Dataset) -> str:
    out = io.StringIO()
    out.write("label,value\n")
    for row in dataset.rows:
        out.write(f"{row.label},{row.value!r}\n")
    return out.getvalue()


def dataset_from_csv(text: str, *, id: int = 0, seed: int = 0) -> Dataset:
    lines = [ln.strip() for ln in text.strip().splitlines() if ln.strip()]
    if lines and lines[0].lower().replace(" ", "") == "label,value":
        lines = lines[1:]
    rows = []
    for ln in lines:
        label, _, raw = ln.partition(",")
        rows.append(DataRow(label.strip(), float(raw)))
    return Dataset(id=id, seed=seed, rows=tuple(rows))
