"""Tests of the HTTP/JSON service."""

import pytest
from fastapi.testclient import TestClient

from omvkit.service import create_app


@pytest.fixture(scope="module")
def client():
    return TestClient(create_app())


def test_space_endpoint(client):
    body = client.get("/api/space").json()
    assert body["marks"] == ["point", "line", "area"]
    assert len(body["channels"]) == 9
    assert set(body["attrs"]) == {"exp", "mant", "nominal", "ordinal",
                                  "temporal", "quant"}
    assert body["eligibility"]["exp"]["Hue"] is False
    assert body["eligibility"]["nominal"]["Hue"] is True


def test_enumerate_endpoint(client):
    assert client.get("/api/enumerate").json()["count"] == 6240
    assert client.get("/api/enumerate?viable=true").json()["count"] == 336
    body = client.get("/api/enumerate?viable=true&dedupe=true").json()
    assert body["count"] == 168
    assert len(body["configs"]) == 168


def test_validate_viable(client):
    resp = client.post(
        "/api/validate",
        json={"config": "line | exp->PosY | mant->PosY | nominal->PosX"},
    )
    assert resp.status_code == 200
    assert resp.json() == {"viable": True, "violations": []}


def test_validate_with_violations(client):
    resp = client.post(
        "/api/validate",
        json={"config": "point | exp->Intensity | mant->Length | quant->Area"},
    )
    body = resp.json()
    assert body["viable"] is False
    assert "NoPosition" in body["violations"]


def test_validate_syntax_error_payload(client):
    resp = client.post("/api/validate", json={"config": "point | exp=>Row"})
    assert resp.status_code == 400
    body = resp.json()
    assert body["error"] == "syntax"
    assert isinstance(body["position"], int)


def test_validate_semantic_error_payload(client):
    resp = client.post("/api/validate", json={"config": "point | exp->Row | mant->PosY"})
    assert resp.status_code == 400
    assert resp.json()["error"] == "semantic"


def test_decompose_endpoint(client):
    assert client.post("/api/decompose", json={"value": 1000}).json() == {
        "mantissa": 1.0,
        "exponent": 3,
    }
    resp = client.post("/api/decompose", json={"value": -3})
    assert resp.status_code == 400
    assert resp.json()["error"] == "non-positive"


def test_render_design_inline_rows(client):
    resp = client.post(
        "/api/render",
        json={
            "design": "facet",
            "rows": [{"label": "A", "value": 12_000.0},
                     {"label": "B", "value": 3.4e9}],
            "highlight": ["A"],
        },
    )
    assert resp.status_code == 200
    assert resp.headers["content-type"].startswith("image/svg+xml")
    assert resp.content.startswith(b"<?xml")


def test_render_builtin_dataset(client):
    resp = client.post("/api/render", json={"design": "eplusm", "dataset_id": 7})
    assert resp.status_code == 200
    again = client.post("/api/render", json={"design": "eplusm", "dataset_id": 7})
    assert resp.content == again.content


def test_render_generic_config(client):
    resp = client.post(
        "/api/render",
        json={"config": "point | exp->Row | mant->PosY | nominal->PosX"},
    )
    assert resp.status_code == 200
    assert b"facet-row" in resp.content


def test_render_domain_exceeded_is_422(client):
    resp = client.post(
        "/api/render",
        json={
            "design": "facet",
            "rows": [{"label": "A", "value": 100.0},
                     {"label": "B", "value": 2e6}],
            "domain_min_exponent": 4,
            "domain_max_exponent": 10,
        },
    )
    assert resp.status_code == 422
    assert resp.json()["error"] == "domain-exceeded"


def test_render_rejects_both_modes(client):
    resp = client.post(
        "/api/render",
        json={"design": "lin",
              "config": "point | exp->Row | mant->PosY | nominal->PosX"},
    )
    assert resp.status_code == 400


def test_render_unrenderable_config(client):
    resp = client.post(
        "/api/render",
        json={"config": "point | exp->Intensity | mant->Length | quant->Area"},
    )
    assert resp.status_code == 400
    assert resp.json()["error"] == "unrenderable"


def test_cli_and_api_verdicts_agree(client):
    from omvkit import design_space, grammar

    for cfg in design_space.enumerate_all()[::271]:
        text = grammar.serialize(cfg)
        api = client.post("/api/validate", json={"config": text}).json()
        verdict = design_space.validate(grammar.parse(text))
        assert api["viable"] == verdict.viable
        assert api["violations"] == list(verdict.violations)


def test_index_fallback_lists_endpoints():
    bare = TestClient(create_app(ui_dir="/nonexistent-ui"))
    body = bare.get("/").json()
    assert body["service"] == "omvkit"


def test_index_serves_ui_when_built(client):
    from pathlib import Path

    dist = Path(__file__).resolve().parent.parent / "frontend" / "dist"
    if not dist.is_dir():
        pytest.skip("explorer UI not built")
    resp = client.get("/")
    assert resp.status_code == 200
    assert "text/html" in resp.headers["content-type"]
    assert "matrix" in resp.text
