"""Decompose, compose, round, and format values in normalized scientific notation.

A positive value ``v`` is held as a pair ``(m, e)`` with ``v = m * 10**e``
and the mantissa normalized to ``m in [1, 10)``.  Zero and negative values
are rejected everywhere: their order of magnitude is undefined, and the
datasets this package targets (budgets, view counts) are strictly positive.

Display rounding is half-away-from-zero, applied through ``decimal`` so the
result matches what a reader would do on the printed digits rather than on
the binary float.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from decimal import ROUND_HALF_UP, Decimal

from .errors import DomainError, NonPositiveValue, OutOfRange

#: Significant digits used for internal math; display precision is a
#: separate, caller-supplied concern.
DEFAULT_PRECISION = 15

#: Units of the hybrid count-plus-scale-word notation ("53 M", "2 B", ...).
HYBRID_UNITS: tuple[tuple[str, float], ...] = (
    ("B", 1e9),
    ("M", 1e6),
    ("k", 1e3),
    ("", 1.0),
)

_HYBRID_MULTIPLIER = dict(HYBRID_UNITS)


@dataclass(frozen=True)
class OmValue:
    """A positive number as (mantissa, exponent, precision) in base 10."""

    mantissa: float
    exponent: int
    precision: int = DEFAULT_PRECISION

    def __post_init__(self):
        if not 1.0 <= self.mantissa < 10.0:
            raise DomainError(f"mantissa {self.mantissa!r} outside [1, 10)")
        if self.precision < 1:
            raise ValueError(f"precision must be >= 1, got {self.precision}")

    @property
    def value(self) -> float:
        return compose(self.mantissa, self.exponent)


@dataclass(frozen=True)
class HybridNotation:
    """A count in [1, 999] plus a scale unit: none, k, M, or B."""

    count: int
    unit: str  # "", "k", "M", or "B"

    def __post_init__(self):
        if not 1 <= self.count <= 999:
            raise OutOfRange(f"hybrid count {self.count} outside [1, 999]")
        if self.unit not in _HYBRID_MULTIPLIER:
            raise OutOfRange(f"unknown hybrid unit {self.unit!r}")

    @property
    def value(self) -> float:
        return self.count * _HYBRID_MULTIPLIER[self.unit]

    def __str__(self) -> str:
        return f"{self.count} {self.unit}".rstrip()


def round_half_away(x: float, ndigits: int = 0) -> float:
    """Round a non-negative float half away from zero on its decimal digits."""
    q = Decimal(1).scaleb(-ndigits)
    return float(Decimal(repr(x)).quantize(q, rounding=ROUND_HALF_UP))


def decompose(value: float, precision: int = DEFAULT_PRECISION) -> OmValue:
    """Split a positive value into a normalized (mantissa, exponent) pair.

    The mantissa is rounded to ``precision`` significant digits; when
    rounding carries it up to 10.0 the pair renormalizes to (1.0, e + 1).

    >>> decompose(1000, 3)
    OmValue(mantissa=1.0, exponent=3, precision=3)
    """
    value = float(value)
    if not math.isfinite(value) or value <= 0:
        raise NonPositiveValue(f"order of magnitude undefined for {value!r}")
    if precision < 1:
        raise ValueError(f"precision must be >= 1, got {precision}")
    exponent = math.floor(math.log10(value))
    mantissa = value / 10.0**exponent
    # log10 can land one off at representation boundaries
    if mantissa >= 10.0:
        mantissa /= 10.0
        exponent += 1
    elif mantissa < 1.0:
        mantissa *= 10.0
        exponent -= 1
    mantissa = round_half_away(mantissa, precision - 1)
    if mantissa >= 10.0:
        mantissa = 1.0
        exponent += 1
    return OmValue(mantissa, exponent, precision)


def compose(mantissa: float, exponent: int | None = None) -> float:
    """Inverse of :func:`decompose`: mantissa * 10**exponent."""
    if isinstance(mantissa, OmValue):
        mantissa, exponent = mantissa.mantissa, mantissa.exponent
    if exponent is None:
        raise TypeError("compose() needs an exponent unless given an OmValue")
    if not 1.0 <= mantissa < 10.0:
        raise DomainError(f"mantissa {mantissa!r} outside [1, 10)")
    return mantissa * 10.0**exponent


def to_hybrid(value: float) -> HybridNotation:
    """Express a value as a count in [1, 999] plus the unit that needs it.

    The smallest unit whose rounded count fits wins, so the count keeps as
    much precision as the schema allows (750,000 -> "750 k", not "1 M").

    >>> to_hybrid(53_000_000)
    HybridNotation(count=53, unit='M')
    """
    value = float(value)
    if not math.isfinite(value) or value <= 0:
        raise OutOfRange(f"hybrid notation cannot express {value!r}")
    for unit, multiplier in reversed(HYBRID_UNITS):
        count = int(round_half_away(value / multiplier))
        if 1 <= count <= 999:
            return HybridNotation(count, unit)
    raise OutOfRange(f"hybrid notation cannot express {value!r}")


def tick_label(exponent: int) -> str:
    """Decimal label of 10**exponent: "1,000" for 3, "0.001" for -3."""
    if exponent >= 0:
        return f"{10**exponent:,d}"
    return f"{Decimal(1).scaleb(exponent):f}"


def value_label(mantissa: float, exponent: int) -> str:
    """Plain decimal label of mantissa * 10**exponent with separators.

    >>> value_label(5, 4)
    '50,000'
    """
    return f"{Decimal(repr(float(mantissa))).scaleb(exponent).normalize():,f}"
