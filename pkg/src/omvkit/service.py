"""HTTP/JSON service exposing validation, rendering, and the design space.

The service is stateless: shared tables (design space, eligibility matrix)
are built once at startup and never mutated, so identical requests yield
identical bodies.  Error responses carry {"error": code, "message": ...}
plus a byte "position" for grammar errors.
"""

from __future__ import annotations

from pathlib import Path

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse, Response
from fastapi.staticfiles import StaticFiles
from pydantic import BaseModel

from . import design_space, grammar
from .core import decompose
from .data import DataRow, Dataset, gen_dataset, sample_seven
from .errors import (
    ConfigSemanticError,
    ConfigSyntaxError,
    DomainExceeded,
    EmptyDataset,
    NonPositiveValue,
    UnrenderableConfig,
)
from .render import DESIGNS, RenderSpec, render


class ValidateBody(BaseModel):
    config: str


class DecomposeBody(BaseModel):
    value: float
    precision: int = 15


class RenderBody(BaseModel):
    config: str | None = None
    design: str | None = None
    dataset_id: int | None = None
    rows: list[dict] | None = None
    width: float = 720.0
    height: float = 480.0
    highlight: list[str] = []
    domain_min_exponent: int | None = None
    domain_max_exponent: int | None = None


def _error(status: int, code: str, message: str, position: int | None = None):
    body = {"error": code, "message": message}
    if position is not None:
        body["position"] = position
    return JSONResponse(status_code=status, content=body)


def _resolve_dataset(body: RenderBody, generic: bool) -> Dataset:
    if body.rows is not None:
        rows = tuple(DataRow(str(r["label"]), float(r["value"])) for r in body.rows)
        return Dataset(id=-1, seed=0, rows=rows)
    dataset = gen_dataset(0, seed=body.dataset_id or 0)
    return sample_seven(dataset) if generic else dataset


def create_app(ui_dir: str | None = None) -> FastAPI:
    app = FastAPI(title="omvkit", docs_url=None, redoc_url=None)

    space = {
        "marks": [m.value for m in design_space.Mark],
        "channels": [c.value for c in design_space.Channel],
        "attrs": list(design_space.ATTR_KEYS),
        "eligibility": design_space.eligibility_matrix(),
    }
    enumerated = {
        (False, False): [grammar.serialize(c) for c in design_space.enumerate_all()],
        (True, False): [grammar.serialize(c) for c in design_space.viable_set()],
        (True, True): [grammar.serialize(c) for c in design_space.canonical_set()],
    }
    enumerated[(False, True)] = list(
        dict.fromkeys(
            grammar.serialize(design_space.canonicalize(c))
            for c in design_space.enumerate_all()
        )
    )

    @app.exception_handler(ConfigSyntaxError)
    async def _syntax_handler(request: Request, exc: ConfigSyntaxError):
        return _error(400, "syntax", str(exc), exc.position)

    @app.exception_handler(ConfigSemanticError)
    async def _semantic_handler(request: Request, exc: ConfigSemanticError):
        return _error(400, "semantic", str(exc), exc.position)

    @app.get("/api/space")
    async def api_space():
        return space

    @app.get("/api/enumerate")
    async def api_enumerate(viable: bool = False, dedupe: bool = False):
        configs = enumerated[(viable, dedupe)]
        return {"count": len(configs), "configs": configs}

    @app.post("/api/validate")
    async def api_validate(body: ValidateBody):
        cfg = grammar.parse(body.config)
        verdict = design_space.validate(cfg)
        return {"viable": verdict.viable, "violations": list(verdict.violations)}

    @app.post("/api/decompose")
    async def api_decompose(body: DecomposeBody):
        try:
            omv = decompose(body.value, body.precision)
        except NonPositiveValue as exc:
            return _error(400, "non-positive", str(exc))
        except ValueError as exc:
            return _error(400, "bad-precision", str(exc))
        return {"mantissa": omv.mantissa, "exponent": omv.exponent}

    @app.post("/api/render")
    async def api_render(body: RenderBody):
        if (body.config is None) == (body.design is None):
            return _error(400, "bad-request", "give exactly one of config or design")
        if body.design is not None and body.design not in DESIGNS:
            return _error(400, "bad-request", f"unknown design {body.design!r}")
        cfg = grammar.parse(body.config) if body.config else None
        try:
            spec = RenderSpec(
                design=body.design or "generic",
                dataset=_resolve_dataset(body, generic=cfg is not None),
                width=body.width,
                height=body.height,
                highlight=tuple(body.highlight),
                config=cfg,
                domain_min_exponent=body.domain_min_exponent,
                domain_max_exponent=body.domain_max_exponent,
            )
            svg = render(spec)
        except DomainExceeded as exc:
            return _error(422, "domain-exceeded", str(exc))
        except (EmptyDataset, NonPositiveValue, ValueError) as exc:
            return _error(400, "bad-request", str(exc))
        except UnrenderableConfig as exc:
            return _error(
                400, "unrenderable",
                f"{exc}; violations: {', '.join(exc.violations)}",
            )
        return Response(content=svg, media_type="image/svg+xml")

    if ui_dir is None:
        bundled = Path(__file__).resolve().parent.parent.parent / "frontend" / "dist"
        if bundled.is_dir():
            ui_dir = str(bundled)
    if ui_dir and Path(ui_dir).is_dir():
        app.mount("/", StaticFiles(directory=ui_dir, html=True), name="ui")
    else:

        @app.get("/")
        async def index():
            return {
                "service": "omvkit",
                "endpoints": [
                    "GET /api/space",
                    "GET /api/enumerate?viable&dedupe",
                    "POST /api/validate",
                    "POST /api/render",
                    "POST /api/decompose",
                ],
            }

    return app
