"""Structural and golden tests for the five chart designs."""

import math
import xml.etree.ElementTree as ET
from pathlib import Path

import pytest

from omvkit.core import decompose
from omvkit.data import DataRow, Dataset, gen_dataset
from omvkit.errors import DomainExceeded, EmptyDataset
from omvkit.render import DESIGNS, RenderSpec, render
from omvkit.scales import eplusm_forward

GOLDEN_DIR = Path(__file__).parent / "golden"
GOLDEN_SEED = 2024

SVG_NS = "{http://www.w3.org/2000/svg}"


def golden_dataset():
    return gen_dataset(0, seed=GOLDEN_SEED)


def spec_for(design, **kwargs):
    defaults = dict(
        design=design,
        dataset=golden_dataset(),
        highlight=("C", "H"),
        domain_min_exponent=4,
        domain_max_exponent=10,
    )
    defaults.update(kwargs)
    return RenderSpec(**defaults)


def parse_svg(svg: bytes) -> ET.Element:
    return ET.fromstring(svg.decode("utf-8"))


def elements_with_class(root, name):
    return [
        el for el in root.iter()
        if name in (el.get("class") or "").split()
    ]


@pytest.mark.parametrize("design", DESIGNS)
def test_render_is_deterministic(design):
    assert render(spec_for(design)) == render(spec_for(design))


@pytest.mark.parametrize("design", DESIGNS)
def test_golden_bytes(design):
    golden = (GOLDEN_DIR / f"{design}.svg").read_bytes()
    assert render(spec_for(design)) == golden


@pytest.mark.parametrize("design", ("facet", "ssb", "eplusm", "log"))
def test_banded_structural_counts(design):
    root = parse_svg(render(spec_for(design)))
    assert len(elements_with_class(root, "separator")) == 6
    assert len(elements_with_class(root, "gridline")) == 21
    assert len(elements_with_class(root, "minor-label")) == 7
    assert len(elements_with_class(root, "tick-label")) == 7


def test_bar_counts():
    for design in ("lin", "log", "eplusm", "facet"):
        root = parse_svg(render(spec_for(design)))
        assert len(elements_with_class(root, "bar")) == 14
    root = parse_svg(render(spec_for("ssb")))
    assert len(elements_with_class(root, "bar")) == 14 * 7


def test_major_labels_identical_across_banded_designs():
    def labels(design):
        root = parse_svg(render(spec_for(design)))
        return [el.text for el in elements_with_class(root, "tick-label")]

    assert labels("ssb") == labels("eplusm") == labels("facet") == labels("log")
    assert labels("eplusm")[0] == "10,000"
    assert labels("eplusm")[-1] == "10,000,000,000"


def test_linear_design_hides_small_magnitudes():
    # values up to 10^7 span under 1/1000 of a 10^11 axis
    root = parse_svg(render(spec_for("lin")))
    ds = golden_dataset()
    plot_h = 480.0 - 26.0 - 44.0
    for el in elements_with_class(root, "bar"):
        label = el.get("id").split("-")[1]
        if decompose(ds.value_of(label)).exponent <= 7:
            assert float(el.get("height")) < plot_h / 1000.0


def test_eplusm_bar_tops_match_scale():
    root = parse_svg(render(spec_for("eplusm")))
    ds = golden_dataset()
    y0, ph = 26.0, 480.0 - 26.0 - 44.0
    for el in elements_with_class(root, "bar"):
        label = el.get("id").split("-")[1]
        s = eplusm_forward(ds.value_of(label))
        expected_top = y0 + ph - (s - 4.0) / 7.0 * ph
        assert float(el.get("y")) == pytest.approx(expected_top, abs=0.01)


def test_facet_fractional_heights_match_eplusm_fraction():
    # at 1000 px plot height the facet bar height divided by the band height
    # must equal frac(eplusm_forward) to half a pixel
    spec = spec_for("facet", height=1000.0 + 26.0 + 44.0)
    root = parse_svg(render(spec))
    ds = golden_dataset()
    band_h = 1000.0 / 7.0
    for el in elements_with_class(root, "bar"):
        label = el.get("id").split("-")[1]
        s = eplusm_forward(ds.value_of(label))
        frac = s - math.floor(s)
        assert float(el.get("height")) / band_h == pytest.approx(
            frac, abs=0.5 / band_h)


def test_facet_bars_stay_inside_their_band():
    root = parse_svg(render(spec_for("facet")))
    ds = golden_dataset()
    y0, ph = 26.0, 480.0 - 26.0 - 44.0
    band_h = ph / 7.0
    for el in elements_with_class(root, "bar"):
        label = el.get("id").split("-")[1]
        e = decompose(ds.value_of(label)).exponent
        band_top = y0 + (10 - e) * band_h
        y = float(el.get("y"))
        h = float(el.get("height"))
        assert band_top - 0.01 <= y
        assert y + h <= band_top + band_h + 0.01


def test_geometry_closure():
    for design in DESIGNS:
        root = parse_svg(render(spec_for(design)))
        for el in elements_with_class(root, "bar"):
            y = float(el.get("y"))
            h = float(el.get("height"))
            assert 26.0 - 0.01 <= y <= y + h <= 26.0 + 410.0 + 0.01


def test_highlight_arrows_reference_existing_bars():
    root = parse_svg(render(spec_for("eplusm")))
    arrows = elements_with_class(root, "highlight-arrow")
    assert {el.get("id") for el in arrows} == {
        "arrow-top-C", "arrow-bottom-C", "arrow-top-H", "arrow-bottom-H",
    }
    highlighted = [
        el for el in elements_with_class(root, "bar")
        if el.get("fill") == "#ff7f0e"
    ]
    assert {el.get("id") for el in highlighted} == {"bar-C", "bar-H"}


def test_ssb_keeps_per_category_colors():
    root = parse_svg(render(spec_for("ssb")))
    fills = {el.get("id").split("-")[1]: el.get("fill")
             for el in elements_with_class(root, "bar")}
    assert len(set(fills.values())) == 14


def test_single_fill_for_plain_designs():
    spec = spec_for("eplusm", highlight=())
    root = parse_svg(render(spec))
    fills = {el.get("fill") for el in elements_with_class(root, "bar")}
    assert fills == {"#4c78a8"}


def test_empty_dataset_rejected():
    empty = Dataset(id=0, seed=0, rows=())
    with pytest.raises(EmptyDataset):
        render(RenderSpec(design="lin", dataset=empty))


def test_domain_exceeded():
    rows = (DataRow("A", 1.0e3), DataRow("B", 5.0e6))
    ds = Dataset(id=0, seed=0, rows=rows)
    with pytest.raises(DomainExceeded):
        render(RenderSpec(design="facet", dataset=ds,
                          domain_min_exponent=4, domain_max_exponent=10))


def test_unknown_highlight_rejected():
    with pytest.raises(ValueError):
        RenderSpec(design="lin", dataset=golden_dataset(), highlight=("ZZ",))


def test_viewbox_matches_size():
    root = parse_svg(render(spec_for("facet", width=640.0, height=400.0)))
    assert root.get("viewBox") == "0 0 640 400"
