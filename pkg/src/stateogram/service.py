"""Embedded HTTP JSON service.

Stateless by construction: every request carries the full circuit and is
simulated from scratch, so concurrent requests share nothing. Responses
reuse the CLI's canonical serializers byte for byte.

Endpoints:
  POST /api/simulate  CircuitDocument -> TraceDocument
  POST /api/render    {"circuit": ..., "step": int, "style"?: {...}} -> SVG
  GET  /api/health    -> "ok"
plus optional static assets for the web UI.
"""

from __future__ import annotations

import json
import os
from pathlib import Path

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse, PlainTextResponse, Response
from fastapi.staticfiles import StaticFiles

from .circuit_io import document_to_circuit
from .circuits import run_circuit
from .errors import DomainError, ParseError, ValidationError
from .svg import RenderStyle, render_svg
from .trace import trace_json

DEFAULT_MAX_QUBITS = 12
MAX_COLUMNS = 256

_STYLE_KEYS = {
    "width": "width_px",
    "height": "height_px",
    "bar_width": "bar_width_px",
    "margin": "margin_px",
    "font_size": "font_size_px",
    "show_vanishing_box": "show_vanishing_box",
    "title": "title",
}


def _error(status: int, message: str) -> JSONResponse:
    return JSONResponse(status_code=status, content={"error": message})


def _decode_body(raw: bytes):
    """Decode a request body, mirroring the CLI's parse diagnostics."""
    try:
        text = raw.decode("utf-8")
    except UnicodeDecodeError as exc:
        raise ParseError("body is not valid UTF-8", line=1, column=exc.start + 1) from exc
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, line=exc.lineno, column=exc.colno) from exc


def _check_size(doc, max_qubits: int) -> str | None:
    if not isinstance(doc, dict):
        return None
    qubits = doc.get("qubits")
    if isinstance(qubits, int) and not isinstance(qubits, bool) and qubits > max_qubits:
        return f"circuit exceeds service limit of {max_qubits} qubits"
    columns = doc.get("columns")
    if isinstance(columns, list) and len(columns) > MAX_COLUMNS:
        return f"circuit exceeds service limit of {MAX_COLUMNS} columns"
    return None


def _style_from_doc(doc) -> RenderStyle:
    if doc is None:
        return RenderStyle()
    if not isinstance(doc, dict):
        raise ValidationError("style must be an object")
    unknown = set(doc) - set(_STYLE_KEYS)
    if unknown:
        raise ValidationError(f"unknown style key(s): {sorted(unknown)}")
    return RenderStyle(**{_STYLE_KEYS[k]: v for k, v in doc.items()})


def create_app(max_qubits: int | None = None, static_dir: str | Path | None = None) -> FastAPI:
    """Build the service app; ``SOG_MAX_QUBITS`` overrides the qubit cap."""
    if max_qubits is None:
        max_qubits = int(os.environ.get("SOG_MAX_QUBITS", DEFAULT_MAX_QUBITS))
    app = FastAPI(title="stateogram", docs_url=None, redoc_url=None)

    @app.get("/api/health")
    def health() -> PlainTextResponse:
        return PlainTextResponse("ok")

    @app.post("/api/simulate")
    async def simulate(request: Request) -> Response:
        raw = await request.body()
        try:
            doc = _decode_body(raw)
        except ParseError as exc:
            return _error(400, str(exc))
        too_big = _check_size(doc, max_qubits)
        if too_big:
            return _error(413, too_big)
        try:
            circuit = document_to_circuit(doc)
        except ValidationError as exc:
            return _error(400, str(exc))
        return Response(content=trace_json(circuit), media_type="application/json")

    @app.post("/api/render")
    async def render(request: Request) -> Response:
        raw = await request.body()
        try:
            doc = _decode_body(raw)
        except ParseError as exc:
            return _error(400, str(exc))
        if not isinstance(doc, dict):
            return _error(400, "render request must be an object")
        unknown = set(doc) - {"circuit", "step", "style"}
        if unknown:
            return _error(400, f"unknown render key(s): {sorted(unknown)}")
        if "circuit" not in doc or "step" not in doc:
            return _error(400, "render request needs 'circuit' and 'step'")
        too_big = _check_size(doc.get("circuit"), max_qubits)
        if too_big:
            return _error(413, too_big)
        try:
            circuit = document_to_circuit(doc["circuit"])
            style = _style_from_doc(doc.get("style"))
        except (ValidationError, DomainError) as exc:
            return _error(400, str(exc))
        step = doc["step"]
        if isinstance(step, bool) or not isinstance(step, int):
            return _error(400, f"step must be an integer, got {step!r}")
        steps = run_circuit(circuit)
        if not 0 <= step < len(steps):
            return _error(400, f"step {step} out of range for {len(steps)} steps")
        svg = render_svg(steps[step].layout, style)
        return Response(content=svg, media_type="image/svg+xml")

    if static_dir is not None:
        app.mount("/", StaticFiles(directory=str(static_dir), html=True), name="static")

    return app
