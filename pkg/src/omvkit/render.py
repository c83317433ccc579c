"""Deterministic SVG rendering of the five experimental bar-chart designs.

Designs: ``lin`` (single linear axis), ``log`` (decade log axis), ``ssb``
(stacked rows, each a linear scale from zero over one decade), ``eplusm``
(single piecewise-linear axis), and ``facet`` (one band per exponent, the
bar drawn only inside its own band).  All five share fonts, band
separators, subdivision lines, and the mantissa-5 minor tick so that only
the scale geometry differs between them.

Output is byte-stable: fixed element order, fixed id scheme
(``bar-<label>``, ``sep-<k>``, ``grid-<k>-<m>``), fixed two-decimal
coordinate formatting, no timestamps or generated ids.  Layout never
depends on font metrics; text is positioned by anchor attributes only.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from xml.sax.saxutils import escape

from .core import decompose
from .data import Dataset
from .design_space import VisConfig
from .errors import DomainExceeded, EmptyDataset
from .scales import (
    SUBDIVISION_MANTISSAS,
    MINOR_MANTISSA,
    ScaleSpec,
    _band_offset,
    eplusm_forward,
    ticks,
)

DESIGNS = ("lin", "log", "ssb", "eplusm", "facet")

_KIND_OF_DESIGN = {
    "lin": "linear",
    "log": "log",
    "ssb": "ssb",
    "eplusm": "eplusm",
    "facet": "facet",
}

#: Categorical palette for the stacked-rows design, which keeps one color
#: per category; orange is reserved for highlights.
SSB_PALETTE = (
    "#8dd3c7", "#bebada", "#fb8072", "#80b1d3", "#fdb462", "#b3de69",
    "#fccde5", "#d9d9d9", "#bc80bd", "#ccebc5", "#ffed6f", "#1f78b4",
    "#33a02c", "#cab2d6",
)


@dataclass(frozen=True)
class StyleSpec:
    band_separator_color: str = "#000000"
    band_separator_width: float = 2.0
    subdivision_color: str = "#bbbbbb"
    subdivision_width: float = 0.75
    bar_fill: str = "#4c78a8"
    ssb_palette: tuple[str, ...] = SSB_PALETTE
    highlight_color: str = "#ff7f0e"
    axis_color: str = "#000000"
    font_family: str = "sans-serif"
    font_size: float = 11.0
    minor_font_size: float = 9.0
    minor_color: str = "#777777"


@dataclass(frozen=True)
class RenderSpec:
    design: str
    dataset: Dataset
    width: float = 720.0
    height: float = 480.0
    highlight: tuple[str, ...] = ()
    style: StyleSpec = StyleSpec()
    config: VisConfig | None = None  # required when design == "generic"
    domain_min_exponent: int | None = None
    domain_max_exponent: int | None = None

    def __post_init__(self):
        if self.design not in DESIGNS + ("generic",):
            raise ValueError(f"unknown design {self.design!r}")
        if not (self.width > 0 and self.height > 0):
            raise ValueError("width and height must be positive")
        if self.design == "generic" and self.config is None:
            raise ValueError("generic design needs a config")
        labels = {r.label for r in self.dataset.rows}
        for h in self.highlight:
            if h not in labels:
                raise ValueError(f"highlighted label {h!r} not in dataset")


def fmt(x: float) -> str:
    """Fixed two-decimal coordinate formatting, trailing zeros stripped."""
    s = f"{x:.2f}".rstrip("0").rstrip(".")
    return "0" if s in ("-0", "") else s


class SvgDoc:
    """Minimal append-only SVG builder with deterministic output."""

    def __init__(self, width: float, height: float):
        self.width = width
        self.height = height
        self.parts: list[str] = []

    def element(self, tag: str, text: str | None = None, **attrs) -> None:
        fragments = [f"<{tag}"]
        for key, value in attrs.items():
            if value is None:
                continue
            name = key.rstrip("_").replace("_", "-")
            if isinstance(value, float):
                value = fmt(value)
            fragments.append(f' {name}="{escape(str(value))}"')
        if text is None:
            fragments.append("/>")
        else:
            fragments.append(f">{escape(text)}</{tag}>")
        self.parts.append("".join(fragments))

    def line(self, x1, y1, x2, y2, **attrs) -> None:
        self.element("line", x1=float(x1), y1=float(y1), x2=float(x2), y2=float(y2), **attrs)

    def rect(self, x, y, w, h, **attrs) -> None:
        self.element("rect", x=float(x), y=float(y), width=float(w), height=float(h), **attrs)

    def text(self, x, y, content, **attrs) -> None:
        self.element("text", text=str(content), x=float(x), y=float(y), **attrs)

    def tobytes(self) -> bytes:
        head = (
            '<?xml version="1.0" encoding="UTF-8"?>\n'
            f'<svg xmlns="http://www.w3.org/2000/svg" '
            f'viewBox="0 0 {fmt(self.width)} {fmt(self.height)}" '
            f'width="{fmt(self.width)}" height="{fmt(self.height)}">\n'
        )
        return (head + "\n".join(self.parts) + "\n</svg>\n").encode("utf-8")


@dataclass(frozen=True)
class _Frame:
    """Resolved plot geometry shared by the five designs."""

    x0: float
    y0: float
    pw: float
    ph: float
    emin: int
    emax: int

    @property
    def bands(self) -> int:
        return self.emax - self.emin + 1

    @property
    def band_h(self) -> float:
        return self.ph / self.bands

    def floor_y(self) -> float:
        return self.y0 + self.ph

    def y_of(self, pos: float) -> float:
        """Pixel y of a scale position measured upward from the domain floor."""
        return self.y0 + self.ph - pos


_MARGINS = (86.0, 16.0, 26.0, 44.0)  # left, right, top, bottom


def _resolve_frame(spec: RenderSpec) -> _Frame:
    if not spec.dataset.rows:
        raise EmptyDataset("cannot render an empty dataset")
    exponents = [decompose(r.value).exponent for r in spec.dataset.rows]
    emin = spec.domain_min_exponent
    emax = spec.domain_max_exponent
    if emin is None:
        emin = min(exponents)
    if emax is None:
        emax = max(max(exponents), emin + 1)
    if emin >= emax:
        raise ValueError("exponent domain must span at least two exponents")
    for row, e in zip(spec.dataset.rows, exponents):
        if not emin <= e <= emax:
            raise DomainExceeded(
                f"value {row.value!r} of {row.label!r} (exponent {e}) outside "
                f"domain [{emin}, {emax}]"
            )
    left, right, top, bottom = _MARGINS
    return _Frame(left, top, spec.width - left - right, spec.height - top - bottom,
                  emin, emax)


def _band_x(frame: _Frame, n: int, i: int) -> tuple[float, float]:
    """(bar left x, bar width) of the i-th of n category bands."""
    bw = frame.pw / n
    bar_w = bw * 0.62
    return frame.x0 + i * bw + (bw - bar_w) / 2.0, bar_w


def _scale_pos(design: str, frame: _Frame, value: float) -> float:
    """Scale position of a value, in pixels above the domain floor."""
    if design == "lin":
        return value / 10.0 ** (frame.emax + 1) * frame.ph
    if design == "log":
        return (math.log10(value) - frame.emin) / frame.bands * frame.ph
    if design == "eplusm":
        return (eplusm_forward(value) - frame.emin) / frame.bands * frame.ph
    raise ValueError(design)


def render(spec: RenderSpec) -> bytes:
    """Compile a design plus dataset into an SVG document (bytes)."""
    if spec.design == "generic":
        from . import gallery  # deferred: gallery builds on this module

        return gallery.render_panel(
            spec.config, spec.dataset, width=spec.width, height=spec.height,
            style=spec.style,
        )
    frame = _resolve_frame(spec)
    doc = SvgDoc(spec.width, spec.height)
    st = spec.style

    doc.rect(frame.x0, frame.y0, frame.pw, frame.ph, class_="frame",
             fill="none", stroke=st.axis_color, stroke_width=1.0)
    _draw_grid(doc, spec, frame)
    _draw_bars(doc, spec, frame)
    _draw_separators(doc, spec, frame)
    _draw_axis_labels(doc, spec, frame)
    _draw_x_labels(doc, spec, frame)
    _draw_highlights(doc, spec, frame)
    return doc.tobytes()


def _grid_rows(design: str, frame: _Frame):
    """(exponent, mantissa, pixel y) of every thin subdivision line."""
    kind = _KIND_OF_DESIGN[design]
    for k in range(frame.emin, frame.emax + 1):
        base = (k - frame.emin) * frame.band_h
        for m in SUBDIVISION_MANTISSAS:
            yield k, m, frame.y_of(base + _band_offset(kind, m) * frame.band_h)


def _draw_grid(doc: SvgDoc, spec: RenderSpec, frame: _Frame) -> None:
    st = spec.style
    x1, x2 = frame.x0, frame.x0 + frame.pw
    if spec.design == "lin":
        for j in range(1, 11):
            y = frame.y_of(j / 10.0 * frame.ph)
            doc.line(x1, y, x2, y, id=f"grid-lin-{j}", class_="gridline",
                     stroke=st.subdivision_color, stroke_width=st.subdivision_width)
        return
    for k, m, y in _grid_rows(spec.design, frame):
        doc.line(x1, y, x2, y, id=f"grid-{k}-{fmt(m)}", class_="gridline",
                 stroke=st.subdivision_color, stroke_width=st.subdivision_width)


def _draw_separators(doc: SvgDoc, spec: RenderSpec, frame: _Frame) -> None:
    if spec.design == "lin":
        return
    st = spec.style
    for k in range(frame.emin + 1, frame.emax + 1):
        y = frame.y_of((k - frame.emin) * frame.band_h)
        doc.line(frame.x0, y, frame.x0 + frame.pw, y, id=f"sep-{k}",
                 class_="separator", stroke=st.band_separator_color,
                 stroke_width=st.band_separator_width)


def _draw_bars(doc: SvgDoc, spec: RenderSpec, frame: _Frame) -> None:
    st = spec.style
    n = len(spec.dataset.rows)
    floor = frame.floor_y()
    for i, row in enumerate(spec.dataset.rows):
        x, w = _band_x(frame, n, i)
        highlighted = row.label in spec.highlight
        if spec.design == "ssb":
            fill = st.ssb_palette[i % len(st.ssb_palette)]
            for k in range(frame.emin, frame.emax + 1):
                frac = min(row.value / 10.0 ** (k + 1), 1.0)
                base = (k - frame.emin) * frame.band_h
                top = frame.y_of(base + frac * frame.band_h)
                doc.rect(x, top, w, frac * frame.band_h,
                         id=f"bar-{row.label}-{k}", class_="bar", fill=fill)
            continue
        fill = st.highlight_color if highlighted else st.bar_fill
        if spec.design == "facet":
            omv = decompose(row.value)
            offset = (omv.mantissa - 1.0) / 9.0
            base = (omv.exponent - frame.emin) * frame.band_h
            top = frame.y_of(base + offset * frame.band_h)
            doc.rect(x, top, w, offset * frame.band_h,
                     id=f"bar-{row.label}", class_="bar", fill=fill)
        else:
            pos = _scale_pos(spec.design, frame, row.value)
            doc.rect(x, frame.y_of(pos), w, pos,
                     id=f"bar-{row.label}", class_="bar", fill=fill)


def _draw_axis_labels(doc: SvgDoc, spec: RenderSpec, frame: _Frame) -> None:
    st = spec.style
    scale = ScaleSpec(_KIND_OF_DESIGN[spec.design], frame.emin, frame.emax, frame.ph)
    tickset = ticks(scale)
    tx = frame.x0 - 6.0
    for i, tick in enumerate(tickset.major):
        y = frame.y_of(tick.position)
        doc.line(frame.x0 - 4.0, y, frame.x0, y, class_="tick",
                 stroke=st.axis_color, stroke_width=1.0)
        doc.text(tx, y, tick.label, id=f"major-{i}", class_="tick-label",
                 text_anchor="end", dominant_baseline="middle",
                 font_family=st.font_family, font_size=st.font_size,
                 fill=st.axis_color)
    for tick, k in zip(tickset.minor, range(frame.emin, frame.emax + 1)):
        y = frame.y_of(tick.position)
        doc.line(frame.x0 - 4.0, y, frame.x0, y, class_="minor-tick",
                 stroke=st.minor_color, stroke_width=1.0)
        doc.text(tx, y, tick.label, id=f"minor-{k}", class_="minor-label",
                 text_anchor="end", dominant_baseline="middle",
                 font_family=st.font_family, font_size=st.minor_font_size,
                 fill=st.minor_color)


def _draw_x_labels(doc: SvgDoc, spec: RenderSpec, frame: _Frame) -> None:
    st = spec.style
    n = len(spec.dataset.rows)
    y = frame.floor_y() + 16.0
    for i, row in enumerate(spec.dataset.rows):
        x, w = _band_x(frame, n, i)
        color = st.highlight_color if row.label in spec.highlight else st.axis_color
        doc.text(x + w / 2.0, y, row.label, id=f"xlabel-{row.label}",
                 class_="x-label", text_anchor="middle",
                 font_family=st.font_family, font_size=st.font_size, fill=color)


def _bar_top_y(spec: RenderSpec, frame: _Frame, value: float) -> float:
    if spec.design == "facet":
        omv = decompose(value)
        base = (omv.exponent - frame.emin) * frame.band_h
        return frame.y_of(base + (omv.mantissa - 1.0) / 9.0 * frame.band_h)
    if spec.design == "ssb":
        # the value's own row is the topmost partially filled one
        omv = decompose(value)
        frac = min(value / 10.0 ** (omv.exponent + 1), 1.0)
        base = (omv.exponent - frame.emin) * frame.band_h
        return frame.y_of(base + frac * frame.band_h)
    return frame.y_of(_scale_pos(spec.design, frame, value))


def _draw_highlights(doc: SvgDoc, spec: RenderSpec, frame: _Frame) -> None:
    st = spec.style
    n = len(spec.dataset.rows)
    for i, row in enumerate(spec.dataset.rows):
        if row.label not in spec.highlight:
            continue
        x, w = _band_x(frame, n, i)
        cx = x + w / 2.0
        top = max(_bar_top_y(spec, frame, row.value) - 6.0, frame.y0 + 8.0)
        doc.element(
            "path",
            d=f"M {fmt(cx - 5)} {fmt(top - 8)} L {fmt(cx + 5)} {fmt(top - 8)} "
              f"L {fmt(cx)} {fmt(top)} Z",
            id=f"arrow-top-{row.label}", class_="highlight-arrow",
            fill=st.highlight_color,
        )
        base = frame.floor_y() + 24.0
        doc.element(
            "path",
            d=f"M {fmt(cx - 5)} {fmt(base + 8)} L {fmt(cx + 5)} {fmt(base + 8)} "
              f"L {fmt(cx)} {fmt(base)} Z",
            id=f"arrow-bottom-{row.label}", class_="highlight-arrow",
            fill=st.highlight_color,
        )
