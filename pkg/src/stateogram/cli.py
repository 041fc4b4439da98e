"""``sog`` command line: render charts, dump traces, emit DJ circuits, serve.

Exit codes are scripting-stable: 0 success, 2 user error (bad flags,
malformed or invalid circuits), 3 environment error (unreadable input,
unwritable output).
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .circuit_io import parse_circuit, serialize_circuit
from .circuits import OracleSpec, dj_circuit, run_circuit
from .errors import DomainError, ParseError, ValidationError
from .svg import RenderStyle, render_strip, render_svg
from .trace import trace_json

EXIT_OK = 0
EXIT_USER = 2
EXIT_ENV = 3


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sog",
        description="Simulate gate circuits and draw per-step state-o-gram charts.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_render = sub.add_parser("render", help="write one SVG per step plus strip.svg")
    p_render.add_argument("circuit", help="circuit file (.sogc.json)")
    p_render.add_argument("-o", "--out", required=True, help="output directory")
    p_render.add_argument("--width", type=int, default=640, help="plot width in px")
    p_render.add_argument("--height", type=int, default=400, help="plot height in px")
    p_render.add_argument("--bar-width", type=int, default=14, help="bar width in px")
    p_render.add_argument(
        "--no-vanishing-box", action="store_true", help="omit the vanishing-state box"
    )
    p_render.add_argument("--title", default=None, help="chart title")

    p_trace = sub.add_parser("trace", help="print the trace document as JSON")
    p_trace.add_argument("circuit", help="circuit file (.sogc.json)")

    p_dj = sub.add_parser("dj", help="emit a Deutsch-Jozsa circuit document")
    kind = p_dj.add_mutually_exclusive_group(required=True)
    kind.add_argument("--constant", type=int, choices=(0, 1), help="constant oracle value")
    kind.add_argument("--balanced", type=int, metavar="MASK", help="parity mask (nonzero)")
    p_dj.add_argument("--negate", action="store_true", help="negate the balanced oracle")
    p_dj.add_argument("--n", type=int, required=True, help="total qubits (>= 2)")

    p_serve = sub.add_parser("serve", help="run the HTTP API and web UI")
    p_serve.add_argument("--port", type=int, default=8000)
    p_serve.add_argument("--host", default="127.0.0.1")
    p_serve.add_argument("--static", default=None, help="directory of web UI assets")
    return parser


def _fail(message: str, code: int) -> int:
    print(f"error: {message}", file=sys.stderr)
    return code


def _read_circuit(path: str):
    """Returns (circuit, None) or (None, exit_code)."""
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        return None, _fail(f"cannot read {path}: {exc.strerror or exc}", EXIT_ENV)
    try:
        return parse_circuit(text), None
    except (ParseError, ValidationError) as exc:
        return None, _fail(str(exc), EXIT_USER)


def cmd_render(args) -> int:
    circuit, code = _read_circuit(args.circuit)
    if circuit is None:
        return code
    try:
        style = RenderStyle(
            width_px=args.width,
            height_px=args.height,
            bar_width_px=args.bar_width,
            show_vanishing_box=not args.no_vanishing_box,
            title=args.title,
        )
    except DomainError as exc:
        return _fail(str(exc), EXIT_USER)
    steps = run_circuit(circuit)
    # render everything before touching the filesystem: no partial output
    files = {
        f"step-{step.column_index:03d}.svg": render_svg(step.layout, style)
        for step in steps
    }
    files["strip.svg"] = render_strip([step.layout for step in steps], style)
    out_dir = Path(args.out)
    try:
        out_dir.mkdir(parents=True, exist_ok=True)
        for name, svg in files.items():
            (out_dir / name).write_text(svg, encoding="utf-8")
    except OSError as exc:
        return _fail(f"cannot write to {out_dir}: {exc.strerror or exc}", EXIT_ENV)
    return EXIT_OK


def cmd_trace(args) -> int:
    circuit, code = _read_circuit(args.circuit)
    if circuit is None:
        return code
    print(trace_json(circuit))
    return EXIT_OK


def cmd_dj(args) -> int:
    try:
        if args.constant is not None:
            spec = OracleSpec.constant(args.constant)
        else:
            spec = OracleSpec.balanced(args.balanced, negate=1 if args.negate else 0)
        circuit = dj_circuit(spec, args.n)
    except DomainError as exc:
        return _fail(str(exc), EXIT_USER)
    print(serialize_circuit(circuit))
    return EXIT_OK


def cmd_serve(args) -> int:
    import uvicorn

    from .service import create_app

    if args.static is not None and not Path(args.static).is_dir():
        return _fail(f"static directory not found: {args.static}", EXIT_ENV)
    app = create_app(static_dir=args.static)
    uvicorn.run(app, host=args.host, port=args.port, log_level="info")
    return EXIT_OK


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    handlers = {
        "render": cmd_render,
        "trace": cmd_trace,
        "dj": cmd_dj,
        "serve": cmd_serve,
    }
    return handlers[args.command](args)


if __name__ == "__main__":
    sys.exit(main())
