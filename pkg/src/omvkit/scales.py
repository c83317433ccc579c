"""Positional scales for charts of values spanning many decades.

Five scale kinds are supported:

``linear``   one linear axis from zero.
``log``      base-10 logarithmic axis.
``eplusm``   piecewise-linear: s(v) = e + (m - 1) / 9, so each decade is a
             unit-length band and mantissas fill it linearly.
``facet``    the same arithmetic split into (row = exponent, offset within
             the row's band).
``ssb``      stacked rows, each an independent linear scale from zero over
             one decade; a value appears in every row, clipped at full.

Tick generation is shared: banded kinds get one major per exponent, a
labeled minor at mantissa 5, thin subdivision lines at mantissas 2.5, 5,
and 7.5, and thick separators between bands.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .core import decompose, tick_label, value_label

SCALE_KINDS = ("linear", "log", "eplusm", "facet", "ssb")

#: Kinds whose axis is divided into one band per exponent.
BANDED_KINDS = ("log", "eplusm", "facet", "ssb")

#: Mantissa values of the thin subdivision lines inside each band.
SUBDIVISION_MANTISSAS = (2.5, 5.0, 7.5)

#: Mantissa of the single labeled minor tick per band.
MINOR_MANTISSA = 5.0


@dataclass(frozen=True)
class ScaleSpec:
    kind: str
    domain_min_exponent: int
    domain_max_exponent: int
    range_extent: float

    def __post_init__(self):
        if self.kind not in SCALE_KINDS:
            raise ValueError(f"unknown scale kind {self.kind!r}")
        if self.domain_min_exponent >= self.domain_max_exponent:
            raise ValueError("domain_min_exponent must be < domain_max_exponent")
        if not self.range_extent > 0:
            raise ValueError("range_extent must be positive")

    @property
    def exponents(self) -> range:
        return range(self.domain_min_exponent, self.domain_max_exponent + 1)

    @property
    def band_count(self) -> int:
        return self.domain_max_exponent - self.domain_min_exponent + 1

    @property
    def band_extent(self) -> float:
        return self.range_extent / self.band_count


@dataclass(frozen=True)
class Tick:
    position: float
    label: str


@dataclass(frozen=True)
class GridLine:
    position: float
    weight: str  # "thick" or "thin"


@dataclass(frozen=True)
class TickSet:
    major: tuple[Tick, ...]
    minor: tuple[Tick, ...]
    gridlines: tuple[GridLine, ...]


def eplusm_forward(value: float) -> float:
    """Map a positive value to exponent + (mantissa - 1) / 9."""
    omv = decompose(value)
    return omv.exponent + (omv.mantissa - 1.0) / 9.0


def eplusm_inverse(s: float) -> float:
    """Positive value whose forward image is ``s``: 10^floor(s) * (1 + 9 frac(s))."""
    e = math.floor(s)
    frac = s - e
    return 10.0**e * (1.0 + 9.0 * frac)


def facet_place(value: float) -> tuple[int, float]:
    """Row (the exponent) and offset in [0, 1) within the row's band."""
    omv = decompose(value)
    return omv.exponent, (omv.mantissa - 1.0) / 9.0


def ssb_rows(value: float, rows: list[int]) -> list[tuple[int, float]]:
    """Fill fraction of each stacked row, each a linear scale [0, 10^(k+1)].

    Rows whose full scale the value exceeds are returned full (1.0).
    """
    decompose(value)  # reject non-positive input
    if not rows:
        raise ValueError("rows must be nonempty")
    if list(rows) != sorted(rows):
        raise ValueError("rows must be ascending")
    return [(k, min(value / 10.0 ** (k + 1), 1.0)) for k in rows]


def _band_offset(kind: str, mantissa: float) -> float:
    """Fractional position of a mantissa inside one band of a banded scale."""
    if kind in ("eplusm", "facet"):
        return (mantissa - 1.0) / 9.0
    if kind == "ssb":
        return mantissa / 10.0
    if kind == "log":
        return math.log10(mantissa)
    raise ValueError(f"scale kind {kind!r} has no bands")


def ticks(spec: ScaleSpec) -> TickSet:
    """Tick and gridline positions in [0, range_extent], increasing from the
    domain floor; orientation is the renderer's concern."""
    if spec.kind == "linear":
        return _linear_ticks(spec)
    band = spec.band_extent
    major = []
    minor = []
    grid = []
    for i, k in enumerate(spec.exponents):
        major.append(Tick(i * band, tick_label(k)))
        minor.append(
            Tick((i + _band_offset(spec.kind, MINOR_MANTISSA)) * band,
                 value_label(MINOR_MANTISSA, k))
        )
        if i > 0:
            grid.append(GridLine(i * band, "thick"))
        for m in SUBDIVISION_MANTISSAS:
            grid.append(GridLine((i + _band_offset(spec.kind, m)) * band, "thin"))
    return TickSet(tuple(major), tuple(minor), tuple(grid))


def _linear_ticks(spec: ScaleSpec) -> TickSet:
    # ten equal steps of 10^max over [0, 10^(max+1)]; no mantissa bands
    step = spec.range_extent / 10.0
    major = [Tick(0.0, "0")]
    grid = []
    for j in range(1, 11):
        major.append(Tick(j * step, value_label(float(j), spec.domain_max_exponent)))
        grid.append(GridLine(j * step, "thin"))
    return TickSet(tuple(major), (), tuple(grid))
