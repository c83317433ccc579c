"""Best-effort panels for arbitrary viable configurations.

Each panel realizes one configuration against a small dataset (ideally one
row per order of magnitude): positional channels place marks, Row/Col build
small multiples, Length draws extents, Area sizes symbols, Intensity ramps
a sequential palette, Hue picks categorical colors, and Shape cycles a
glyph set.  The panel title is the configuration's text form.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .core import decompose
from .data import Dataset
from .design_space import Channel, Mark, VisConfig, validate
from .errors import EmptyDataset, UnrenderableConfig
from .grammar import config_filename, serialize
from .render import StyleSpec, SvgDoc, fmt

HUE_PALETTE = (
    "#4c78a8", "#f58518", "#54a24b", "#e45756", "#72b7b2", "#b279a2",
    "#eeca3b", "#9d755d", "#bab0ac", "#d67195",
)

_RAMP_LO = (0xDE, 0xEB, 0xF7)
_RAMP_HI = (0x08, 0x51, 0x9C)

SHAPES = ("circle", "square", "diamond", "triangle-up", "triangle-down",
          "cross", "star")


def _ramp(norm: float) -> str:
    rgb = (round(lo + (hi - lo) * norm) for lo, hi in zip(_RAMP_LO, _RAMP_HI))
    return "#" + "".join(f"{c:02x}" for c in rgb)


@dataclass(frozen=True)
class _PanelData:
    labels: tuple[str, ...]
    exponents: tuple[int, ...]
    mantissas: tuple[float, ...]
    emin: int
    emax: int

    @classmethod
    def from_dataset(cls, dataset: Dataset) -> "_PanelData":
        if not dataset.rows:
            raise EmptyDataset("cannot render an empty dataset")
        decomposed = [decompose(r.value) for r in dataset.rows]
        exps = tuple(d.exponent for d in decomposed)
        return cls(
            labels=tuple(r.label for r in dataset.rows),
            exponents=exps,
            mantissas=tuple(d.mantissa for d in decomposed),
            emin=min(exps),
            emax=max(exps),
        )

    @property
    def n(self) -> int:
        return len(self.labels)

    def exp_norm(self, i: int) -> float:
        span = max(self.emax - self.emin, 1)
        return (self.exponents[i] - self.emin) / span

    def mant_norm(self, i: int) -> float:
        return (self.mantissas[i] - 1.0) / 9.0

    def other_norm(self, i: int) -> float:
        return i / max(self.n - 1, 1)

    def eplusm_norm(self, i: int) -> float:
        s = self.exponents[i] + self.mant_norm(i)
        return (s - self.emin) / (self.emax + 1 - self.emin)


def _attr_norm(data: _PanelData, attr: str, i: int) -> float:
    if attr == "exp":
        return data.exp_norm(i)
    if attr == "mant":
        return data.mant_norm(i)
    return data.other_norm(i)


def _facet_values(data: _PanelData, attr: str) -> list:
    if attr == "exp":
        # largest magnitude reads first (top row / left column)
        return sorted(set(data.exponents), reverse=True)
    return list(data.labels)


def _facet_index(data: _PanelData, attr: str, values: list, i: int) -> int:
    if attr == "exp":
        return values.index(data.exponents[i])
    return values.index(data.labels[i])


def _channel_attrs(cfg: VisConfig) -> dict[Channel, list[str]]:
    bound: dict[Channel, list[str]] = {}
    bound.setdefault(cfg.exp_channel, []).append("exp")
    bound.setdefault(cfg.mant_channel, []).append("mant")
    bound.setdefault(cfg.other_channel, []).append("other")
    return bound


def render_panel(
    cfg: VisConfig,
    dataset: Dataset,
    width: float = 360.0,
    height: float = 300.0,
    style: StyleSpec = StyleSpec(),
) -> bytes:
    """One SVG panel for a viable configuration."""
    verdict = validate(cfg)
    if not verdict.viable:
        raise UnrenderableConfig(
            f"configuration violates: {', '.join(verdict.violations)}",
            verdict.violations,
        )
    data = _PanelData.from_dataset(dataset)
    bound = _channel_attrs(cfg)

    def attrs_on(channel: Channel) -> list[str]:
        return bound.get(channel, [])

    doc = SvgDoc(width, height)
    doc.text(8.0, 14.0, serialize(cfg), class_="title",
             font_family=style.font_family, font_size=9.0, fill="#333333")

    plot_x, plot_y = 30.0, 24.0
    plot_w, plot_h = width - plot_x - 10.0, height - plot_y - 24.0

    row_attr = attrs_on(Channel.Row)
    col_attr = attrs_on(Channel.Col)
    row_values = _facet_values(data, row_attr[0]) if row_attr else [None]
    col_values = _facet_values(data, col_attr[0]) if col_attr else [None]
    cell_w = plot_w / len(col_values)
    cell_h = plot_h / len(row_values)

    for r in range(len(row_values)):
        for c in range(len(col_values)):
            cls = "cell"
            if row_attr:
                cls += " facet-row"
            if col_attr:
                cls += " facet-col"
            doc.rect(plot_x + c * cell_w, plot_y + r * cell_h, cell_w, cell_h,
                     class_=cls, fill="none", stroke="#cccccc", stroke_width=0.75)

    def position(attr: str | None, i: int, eplusm: bool) -> float:
        """Normalized coordinate (0 at low end) along one positional axis."""
        if eplusm:
            return data.eplusm_norm(i)
        if attr is None:
            return 0.5
        if attr == "mant":
            return data.mant_norm(i)
        if attr == "exp":
            levels = sorted(set(data.exponents))
            return (levels.index(data.exponents[i]) + 0.5) / len(levels)
        return (i + 0.5) / data.n

    x_attrs = attrs_on(Channel.PosX)
    y_attrs = attrs_on(Channel.PosY)
    x_eplusm = cfg.eplusm and cfg.exp_channel is Channel.PosX
    y_eplusm = cfg.eplusm and cfg.exp_channel is Channel.PosY
    length_attrs = attrs_on(Channel.Length)
    area_attrs = attrs_on(Channel.Area)
    intensity_attrs = attrs_on(Channel.Intensity)
    hue_attrs = attrs_on(Channel.Hue)
    shape_attrs = attrs_on(Channel.Shape)

    pad = 6.0
    for i in range(data.n):
        r = _facet_index(data, row_attr[0], row_values, i) if row_attr else 0
        c = _facet_index(data, col_attr[0], col_values, i) if col_attr else 0
        cx0 = plot_x + c * cell_w
        cy0 = plot_y + r * cell_h
        inner_w = cell_w - 2 * pad
        inner_h = cell_h - 2 * pad
        xn = position(x_attrs[0] if x_attrs else None, i, x_eplusm)
        yn = position(y_attrs[0] if y_attrs else None, i, y_eplusm)
        x = cx0 + pad + xn * inner_w
        y = cy0 + pad + (1.0 - yn) * inner_h

        fill = style.bar_fill
        if hue_attrs:
            fill = HUE_PALETTE[i % len(HUE_PALETTE)]
        elif intensity_attrs:
            fill = _ramp(_attr_norm(data, intensity_attrs[0], i))

        ident = f"mark-{data.labels[i]}"
        if cfg.mark is Mark.line:
            bar_w = max(inner_w / data.n * 0.6, 3.0)
            if length_attrs:
                length = 4.0 + _attr_norm(data, length_attrs[0], i) * (inner_h * 0.85 - 4.0)
                anchor = y if y_attrs or y_eplusm else cy0 + pad + inner_h
                doc.rect(x - bar_w / 2.0, anchor - length, bar_w, length,
                         id=ident, class_="mark bar", fill=fill)
            else:
                floor = cy0 + pad + inner_h
                doc.rect(x - bar_w / 2.0, min(y, floor), bar_w, abs(floor - y),
                         id=ident, class_="mark bar", fill=fill)
        elif cfg.mark is Mark.area:
            step = inner_w / data.n
            slab_x = cx0 + pad + i * step if not x_attrs else x - step / 2.0
            floor = cy0 + pad + inner_h
            doc.rect(slab_x, min(y, floor), step, abs(floor - y),
                     id=ident, class_="mark area", fill=fill, fill_opacity=0.85)
        else:
            radius = 4.0
            if area_attrs:
                radius = 2.0 + 8.0 * math.sqrt(_attr_norm(data, area_attrs[0], i))
            if length_attrs:
                length = 4.0 + _attr_norm(data, length_attrs[0], i) * (inner_h * 0.85 - 4.0)
                doc.line(x, y - length / 2.0, x, y + length / 2.0, id=ident,
                         class_="mark rule", stroke=fill, stroke_width=2.5)
            elif shape_attrs:
                _glyph(doc, SHAPES[i % len(SHAPES)], x, y, radius, fill, ident)
            else:
                doc.element("circle", cx=float(x), cy=float(y), r=float(radius),
                            id=ident, class_="mark point", fill=fill)

    return doc.tobytes()


def _glyph(doc: SvgDoc, shape: str, x: float, y: float, r: float,
           fill: str, ident: str) -> None:
    cls = "mark point"
    if shape == "circle":
        doc.element("circle", cx=float(x), cy=float(y), r=float(r), id=ident,
                    class_=cls, fill=fill)
    elif shape == "square":
        doc.rect(x - r, y - r, 2 * r, 2 * r, id=ident, class_=cls, fill=fill)
    elif shape == "diamond":
        pts = f"{fmt(x)},{fmt(y - r)} {fmt(x + r)},{fmt(y)} {fmt(x)},{fmt(y + r)} {fmt(x - r)},{fmt(y)}"
        doc.element("polygon", points=pts, id=ident, class_=cls, fill=fill)
    elif shape == "triangle-up":
        pts = f"{fmt(x)},{fmt(y - r)} {fmt(x + r)},{fmt(y + r)} {fmt(x - r)},{fmt(y + r)}"
        doc.element("polygon", points=pts, id=ident, class_=cls, fill=fill)
    elif shape == "triangle-down":
        pts = f"{fmt(x)},{fmt(y + r)} {fmt(x + r)},{fmt(y - r)} {fmt(x - r)},{fmt(y - r)}"
        doc.element("polygon", points=pts, id=ident, class_=cls, fill=fill)
    elif shape == "cross":
        doc.element(
            "path",
            d=f"M {fmt(x - r)} {fmt(y - r)} L {fmt(x + r)} {fmt(y + r)} "
              f"M {fmt(x - r)} {fmt(y + r)} L {fmt(x + r)} {fmt(y - r)}",
            id=ident, class_=cls, stroke=fill, stroke_width=2.0, fill="none",
        )
    else:  # star
        pts = []
        for j in range(10):
            rad = r if j % 2 == 0 else r * 0.45
            ang = -math.pi / 2.0 + j * math.pi / 5.0
            pts.append(f"{fmt(x + rad * math.cos(ang))},{fmt(y + rad * math.sin(ang))}")
        doc.element("polygon", points=" ".join(pts), id=ident, class_=cls, fill=fill)


def render_gallery(
    configs: list[VisConfig],
    dataset: Dataset,
    width: float = 360.0,
    height: float = 300.0,
    style: StyleSpec = StyleSpec(),
) -> list[tuple[VisConfig, bytes]]:
    """One panel per configuration, in input order."""
    return [
        (cfg, render_panel(cfg, dataset, width=width, height=height, style=style))
        for cfg in configs
    ]


def gallery_manifest(entries: list[tuple[VisConfig, str]]) -> str:
    """Tab-separated manifest: configuration text -> file name."""
    return "".join(f"{serialize(cfg)}\t{name}\n" for cfg, name in entries)


def write_gallery(configs: list[VisConfig], dataset: Dataset, out_dir) -> list[str]:
    """Render panels into ``out_dir`` plus a manifest.tsv; returns file names."""
    from pathlib import Path

    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    names = []
    manifest_entries = []
    for cfg, svg in render_gallery(configs, dataset):
        name = config_filename(cfg)
        (out / name).write_bytes(svg)
        names.append(name)
        manifest_entries.append((cfg, name))
    (out / "manifest.tsv").write_text(gallery_manifest(manifest_entries))
    return names
