"""Tests for generic configuration panels and the gallery writer."""

import xml.etree.ElementTree as ET

import pytest

from omvkit.data import gen_dataset, sample_seven
from omvkit.design_space import canonical_set, mirror
from omvkit.errors import UnrenderableConfig
from omvkit.gallery import render_gallery, render_panel, write_gallery
from omvkit.grammar import parse, serialize


def seven_rows():
    return sample_seven(gen_dataset(0, seed=77))


def classed(root, name):
    return [el for el in root.iter() if name in (el.get("class") or "").split()]


def test_all_canonical_configs_render():
    panels = render_gallery(list(canonical_set()), seven_rows())
    assert len(panels) == 168
    for cfg, svg in panels:
        assert svg.startswith(b"<?xml")
        root = ET.fromstring(svg.decode())
        titles = classed(root, "title")
        assert titles and titles[0].text == serialize(cfg)


def test_panel_deterministic():
    cfg = parse("point | exp->Row | mant->PosY | nominal->PosX")
    a = render_panel(cfg, seven_rows())
    assert a == render_panel(cfg, seven_rows())


def test_facet_config_bands_rows_by_exponent():
    cfg = parse("point | exp->Row | mant->PosY | nominal->PosX")
    root = ET.fromstring(render_panel(cfg, seven_rows()).decode())
    assert len(classed(root, "facet-row")) == 7
    assert not classed(root, "facet-col")


def test_mirrored_configs_transpose_layout():
    cfg = parse("point | exp->Row | mant->PosY | nominal->PosX")
    twin = mirror(cfg)
    root = ET.fromstring(render_panel(cfg, seven_rows()).decode())
    twin_root = ET.fromstring(render_panel(twin, seven_rows()).decode())
    assert len(classed(root, "facet-row")) == 7
    assert len(classed(twin_root, "facet-col")) == 7
    assert not classed(twin_root, "facet-row")


def test_marks_present_per_config():
    data = seven_rows()
    for text, cls in [
        ("point | exp->Row | mant->PosY | nominal->PosX", "point"),
        ("line | exp->PosY | mant->PosY | nominal->PosX", "bar"),
        ("line | exp->PosY | mant->Length | nominal->PosX", "bar"),
        ("area | exp->Intensity | mant->PosY | temporal->PosX", "area"),
        ("point | exp->PosY | mant->Length | nominal->PosX", "rule"),
        ("point | exp->Area | mant->PosY | nominal->Shape", "point"),
    ]:
        root = ET.fromstring(render_panel(parse(text), data).decode())
        assert len(classed(root, cls)) == 7, text


def test_shape_channel_uses_distinct_glyphs():
    cfg = parse("point | exp->PosY | mant->PosX | nominal->Shape")
    root = ET.fromstring(render_panel(cfg, seven_rows()).decode())
    tags = {el.tag.split("}")[-1] for el in classed(root, "mark")}
    assert len(tags) >= 3  # circle, rect, polygon, path...


def test_nonviable_config_raises():
    cfg = parse("point | exp->Intensity | mant->Length | quant->Area")
    with pytest.raises(UnrenderableConfig) as info:
        render_panel(cfg, seven_rows())
    assert "NoPosition" in info.value.violations


def test_write_gallery_manifest(tmp_path):
    configs = list(canonical_set())[:5]
    names = write_gallery(configs, seven_rows(), tmp_path)
    assert len(names) == 5
    manifest = (tmp_path / "manifest.tsv").read_text().strip().splitlines()
    assert len(manifest) == 5
    for line, cfg, name in zip(manifest, configs, names):
        text, _, file = line.partition("\t")
        assert text == serialize(cfg)
        assert file == name
        assert (tmp_path / name).exists()
