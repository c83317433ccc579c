"""Enumerate, validate, and canonicalize visualization configurations.

A configuration binds a mark plus three data attributes (exponent, mantissa,
and one other attribute) to visual channels.  The full space is every
one-to-one assignment of the nine channels to the three attributes, plus the
combined-scale forms where exponent and mantissa share one positional
channel, for each of three marks and four other-attribute types:
3 * 4 * (504 + 16) = 6,240.

Validation applies the constraint set reconstructed from the perception
literature; 336 of the 6,240 survive.  Mirroring x/y and row/column pairs
every viable configuration with a transposed twin, so canonicalization
halves the set to 168.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from enum import Enum
from functools import cache


class Channel(Enum):
    PosX = "PosX"
    PosY = "PosY"
    Row = "Row"
    Col = "Col"
    Length = "Length"
    Area = "Area"
    Intensity = "Intensity"
    Hue = "Hue"
    Shape = "Shape"

    def __str__(self) -> str:
        return self.value


class Mark(Enum):
    point = "point"
    line = "line"
    area = "area"

    def __str__(self) -> str:
        return self.value


class OtherType(Enum):
    nominal = "nominal"
    ordinal = "ordinal"
    temporal = "temporal"
    quantitative = "quantitative"

    def __str__(self) -> str:
        return self.value


POSITIONAL = frozenset({Channel.PosX, Channel.PosY})
FACET_CHANNELS = frozenset({Channel.Row, Channel.Col})

# Rule identifiers, in reporting order.
RULES = (
    "NoPosition",
    "ExpressivenessHueShape",
    "ExpressivenessIntensity",
    "ExpressivenessLengthArea",
    "FacetOnlyExponent",
    "ShapeAreaPointOnly",
    "LengthNotOnArea",
    "AreaMarkTemporalOnly",
    "LineNotQuantitative",
    "HueIntensityClash",
    "ShapeLengthClash",
    "LengthAreaClash",
    "AreaIntensityClash",
    "DuplicateChannel",
)


@dataclass(frozen=True)
class VisConfig:
    """One mark plus channel bindings for exponent, mantissa, and another attribute.

    Structurally invalid bindings (duplicate channels outside the shared
    positional form) are representable; :func:`validate` reports them.
    """

    mark: Mark
    exp_channel: Channel
    mant_channel: Channel
    other_type: OtherType
    other_channel: Channel

    @property
    def eplusm(self) -> bool:
        """True when exponent and mantissa share one positional channel."""
        return self.exp_channel == self.mant_channel and self.exp_channel in POSITIONAL

    @property
    def channels(self) -> frozenset[Channel]:
        return frozenset({self.exp_channel, self.mant_channel, self.other_channel})


@dataclass(frozen=True)
class ConstraintVerdict:
    viable: bool
    violations: tuple[str, ...]


def validate(cfg: VisConfig) -> ConstraintVerdict:
    """Check every constraint and report all violated rules, not just the first."""
    v = []
    chans = cfg.channels
    exp, mant, other = cfg.exp_channel, cfg.mant_channel, cfg.other_channel

    if exp == mant and exp not in POSITIONAL:
        v.append("DuplicateChannel")
    if other == exp or other == mant:
        v.append("DuplicateChannel")

    if not chans & POSITIONAL:
        v.append("NoPosition")

    # expressiveness: hue/shape identify nominal data only; intensity suits
    # ordinal and quantitative; length/area need quantitative magnitudes
    if exp in (Channel.Hue, Channel.Shape) or mant in (Channel.Hue, Channel.Shape):
        v.append("ExpressivenessHueShape")
    elif other in (Channel.Hue, Channel.Shape) and cfg.other_type is not OtherType.nominal:
        v.append("ExpressivenessHueShape")
    if other is Channel.Intensity and cfg.other_type not in (
        OtherType.ordinal,
        OtherType.quantitative,
    ):
        v.append("ExpressivenessIntensity")
    if other in (Channel.Length, Channel.Area) and cfg.other_type is not OtherType.quantitative:
        v.append("ExpressivenessLengthArea")

    # faceting carries the exponent only; the sole exception keeps both row
    # and column when the exponent takes one and a nominal attribute the other
    if mant in FACET_CHANNELS and not cfg.eplusm:
        v.append("FacetOnlyExponent")
    if other in FACET_CHANNELS:
        paired = (
            exp in FACET_CHANNELS
            and exp != other
            and cfg.other_type is OtherType.nominal
        )
        if not paired:
            v.append("FacetOnlyExponent")

    if cfg.mark is not Mark.point and chans & {Channel.Shape, Channel.Area}:
        v.append("ShapeAreaPointOnly")
    if cfg.mark is Mark.area and Channel.Length in chans:
        v.append("LengthNotOnArea")
    if cfg.mark is Mark.area and cfg.other_type is not OtherType.temporal:
        v.append("AreaMarkTemporalOnly")
    if cfg.mark is Mark.line and cfg.other_type is OtherType.quantitative:
        v.append("LineNotQuantitative")

    # interference between integral channel pairs
    if {Channel.Hue, Channel.Intensity} <= chans:
        v.append("HueIntensityClash")
    if {Channel.Shape, Channel.Length} <= chans:
        v.append("ShapeLengthClash")
    if {Channel.Length, Channel.Area} <= chans:
        v.append("LengthAreaClash")
    if {Channel.Area, Channel.Intensity} <= chans:
        v.append("AreaIntensityClash")

    violations = tuple(sorted(set(v), key=RULES.index))
    return ConstraintVerdict(not violations, violations)


@cache
def enumerate_all() -> tuple[VisConfig, ...]:
    """Every configuration in deterministic (mark, other_type, exp, mant, other) order."""
    out = []
    for mark in Mark:
        for other_type in OtherType:
            for exp in Channel:
                for mant in Channel:
                    if exp == mant and exp not in POSITIONAL:
                        continue
                    for other in Channel:
                        if other == exp or other == mant:
                            continue
                        out.append(VisConfig(mark, exp, mant, other_type, other))
    return tuple(out)


@cache
def viable_set() -> tuple[VisConfig, ...]:
    """The configurations that satisfy every constraint, in enumeration order."""
    return tuple(c for c in enumerate_all() if validate(c).viable)


_MIRROR = {
    Channel.PosX: Channel.PosY,
    Channel.PosY: Channel.PosX,
    Channel.Row: Channel.Col,
    Channel.Col: Channel.Row,
}


def mirror(cfg: VisConfig) -> VisConfig:
    """Transpose the configuration: swap PosX with PosY and Row with Col."""
    return replace(
        cfg,
        exp_channel=_MIRROR.get(cfg.exp_channel, cfg.exp_channel),
        mant_channel=_MIRROR.get(cfg.mant_channel, cfg.mant_channel),
        other_channel=_MIRROR.get(cfg.other_channel, cfg.other_channel),
    )


# Preference when choosing between a configuration and its mirror: keep PosY
# over PosX and Row over Col, weighing the exponent first, then mantissa,
# then the other attribute.
_MIRROR_RANK = {Channel.PosX: 1, Channel.Col: 1}


def _preference_key(cfg: VisConfig) -> tuple[int, int, int]:
    return (
        _MIRROR_RANK.get(cfg.exp_channel, 0),
        _MIRROR_RANK.get(cfg.mant_channel, 0),
        _MIRROR_RANK.get(cfg.other_channel, 0),
    )


def canonicalize(cfg: VisConfig) -> VisConfig:
    """The preferred representative of {cfg, mirror(cfg)}; idempotent."""
    twin = mirror(cfg)
    return cfg if _preference_key(cfg) <= _preference_key(twin) else twin


@cache
def canonical_set() -> tuple[VisConfig, ...]:
    """Distinct canonical forms of the viable set, in first-seen order."""
    seen = []
    have = set()
    for cfg in viable_set():
        canon = canonicalize(cfg)
        if canon not in have:
            have.add(canon)
            seen.append(canon)
    return tuple(seen)


#: Attribute keys used by the eligibility matrix and the config grammar.
ATTR_KEYS = ("exp", "mant", "nominal", "ordinal", "temporal", "quant")


@cache
def eligibility_matrix() -> dict[str, dict[str, bool]]:
    """attr -> channel -> whether some viable configuration uses that assignment."""
    matrix = {a: {c.value: False for c in Channel} for a in ATTR_KEYS}
    short = {
        OtherType.nominal: "nominal",
        OtherType.ordinal: "ordinal",
        OtherType.temporal: "temporal",
        OtherType.quantitative: "quant",
    }
    for cfg in viable_set():
        matrix["exp"][cfg.exp_channel.value] = True
        matrix["mant"][cfg.mant_channel.value] = True
        matrix[short[cfg.other_type]][cfg.other_channel.value] = True
    return matrix
