"""Trace documents: the machine-diffable JSON record of a full simulation."""

from __future__ import annotations

import json

from .circuit_io import circuit_to_document
from .circuits import Circuit, run_circuit


def build_trace_document(c: Circuit) -> dict:
    """Simulate ``c`` and package every step's state and layout.

    Steps always number columns + 1; step 0 is the classical init state.
    """
    steps = []
    for step in run_circuit(c):
        steps.append(
            {
                "column_index": step.column_index,
                "state": step.state.to_json_dict(),
                "layout": step.layout.to_json_dict(),
            }
        )
    return {"circuit": circuit_to_document(c), "steps": steps}


def canonical_json(doc: dict) -> str:
    """Canonical serialization: fixed key order, compact, full-precision floats."""
    return json.dumps(doc, separators=(",", ":"), ensure_ascii=False)


def trace_json(c: Circuit) -> str:
    return canonical_json(build_trace_document(c))
