"""Shared test utilities: random states/circuits, strategies, SVG audits."""

from __future__ import annotations

import math
import re

import numpy as np
from hypothesis import assume
from hypothesis import strategies as st

from stateogram import (
    GATE_ARITY,
    Circuit,
    Gate,
    QuantumState,
    chart_geometry,
    render_svg,
)

S2 = 1.0 / math.sqrt(2.0)
S8 = 1.0 / math.sqrt(8.0)

GATE_KINDS = list(GATE_ARITY)

BAR_RECT_RE = re.compile(
    r'<rect class="bar" x="([-0-9.]+)" y="([-0-9.]+)" width="([-0-9.]+)"'
    r' height="([-0-9.]+)" fill="rgb\((\d+),(\d+),(\d+)\)"/>'
)


def parse_bars(svg: str) -> list[dict]:
    """Extract the bar rectangles from rendered SVG text."""
    return [
        {
            "x": float(m[0]),
            "y": float(m[1]),
            "w": float(m[2]),
            "h": float(m[3]),
            "rgb": (int(m[4]), int(m[5]), int(m[6])),
        }
        for m in BAR_RECT_RE.findall(svg)
    ]


def audit_geometry(layout, style, tol: float = 1e-3) -> None:
    """Invert the pixel map on emitted rects; must recover the layout."""
    svg = render_svg(layout, style)
    geom = chart_geometry(style)
    rects = parse_bars(svg)
    assert len(rects) == len(layout.bars)
    for rect, bar in zip(rects, layout.bars):
        angle = geom.angle_at(rect["x"] + rect["w"] / 2)
        height = rect["h"] / geom.plot_h
        y_offset = 1.0 - height - (rect["y"] - geom.top) / geom.plot_h
        assert abs(angle - bar.angle) < tol
        assert abs(height - bar.height) < tol
        assert abs(y_offset - bar.y_offset) < tol
        assert rect["rgb"] == bar.color


def random_state(rng: np.random.Generator, n_qubits: int) -> QuantumState:
    """Normalized state with gaussian-random amplitudes."""
    vec = rng.standard_normal(2**n_qubits) + 1j * rng.standard_normal(2**n_qubits)
    return QuantumState(n_qubits, vec / np.linalg.norm(vec))


def random_gate(rng: np.random.Generator, kind: str, n_qubits: int) -> Gate:
    targets = rng.choice(n_qubits, size=GATE_ARITY[kind], replace=False)
    theta = float(rng.uniform(-math.pi, math.pi)) if kind == "PHASE" else None
    return Gate(kind, tuple(int(t) for t in targets), theta)


def random_circuit(
    rng: np.random.Generator, max_qubits: int = 6, max_depth: int = 20
) -> Circuit:
    """Random valid circuit: disjoint targets per column, mixed gate kinds."""
    n = int(rng.integers(1, max_qubits + 1))
    init = tuple(int(b) for b in rng.integers(0, 2, size=n))
    depth = int(rng.integers(0, max_depth + 1))
    columns = []
    for _ in range(depth):
        order = list(rng.permutation(n))
        column = []
        while order:
            kinds = [k for k in GATE_KINDS if GATE_ARITY[k] <= len(order)]
            kind = kinds[int(rng.integers(len(kinds)))]
            targets = tuple(order.pop() for _ in range(GATE_ARITY[kind]))
            theta = float(rng.uniform(-math.pi, math.pi)) if kind == "PHASE" else None
            column.append(Gate(kind, targets, theta))
            if rng.random() < 0.4:
                break
        columns.append(tuple(column))
    return Circuit(n_qubits=n, init=init, columns=tuple(columns))


@st.composite
def quantum_states(draw, min_qubits: int = 1, max_qubits: int = 5) -> QuantumState:
    n = draw(st.integers(min_qubits, max_qubits))
    dim = 2**n
    parts = draw(
        st.lists(
            st.tuples(
                st.floats(-1, 1, allow_nan=False, allow_infinity=False),
                st.floats(-1, 1, allow_nan=False, allow_infinity=False),
            ),
            min_size=dim,
            max_size=dim,
        )
    )
    amps = np.array([complex(re, im) for re, im in parts])
    norm = np.linalg.norm(amps)
    assume(norm > 1e-6)
    return QuantumState(n, amps / norm)


@st.composite
def gates(draw, n_qubits: int) -> Gate:
    kinds = [k for k in GATE_KINDS if GATE_ARITY[k] <= n_qubits]
    kind = draw(st.sampled_from(kinds))
    targets = tuple(
        draw(
            st.lists(
                st.integers(0, n_qubits - 1),
                min_size=GATE_ARITY[kind],
                max_size=GATE_ARITY[kind],
                unique=True,
            )
        )
    )
    theta = None
    if kind == "PHASE":
        theta = draw(st.floats(-math.pi, math.pi, allow_nan=False))
    return Gate(kind, targets, theta)


@st.composite
def circuits(draw, max_qubits: int = 5, max_depth: int = 8) -> Circuit:
    n = draw(st.integers(1, max_qubits))
    init = tuple(draw(st.lists(st.integers(0, 1), min_size=n, max_size=n)))
    depth = draw(st.integers(0, max_depth))
    columns = []
    for _ in range(depth):
        order = list(draw(st.permutations(range(n))))
        column = []
        while order:
            kinds = [k for k in GATE_KINDS if GATE_ARITY[k] <= len(order)]
            kind = draw(st.sampled_from(kinds))
            targets = tuple(order.pop() for _ in range(GATE_ARITY[kind]))
            theta = draw(st.floats(-math.pi, math.pi, allow_nan=False)) if kind == "PHASE" else None
            column.append(Gate(kind, targets, theta))
            if draw(st.booleans()):
                break
        columns.append(tuple(column))
    return Circuit(n_qubits=n, init=init, columns=tuple(columns))
