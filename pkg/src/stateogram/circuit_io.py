"""Textual circuit format: a strict JSON dialect (``.sogc.json``).

Document shape::

    {"version": "1", "qubits": 2, "init": [0, 0],
     "columns": [[{"gate": "H", "targets": [0]}], ...]}

Gates carry explicit target lists (controls first); ``theta`` appears
exactly on ``PHASE`` gates. Gate names are case-insensitive on input and
canonical uppercase on output. Unknown keys are rejected so typos fail
loudly. Serialization is canonical: fixed key order, compact separators,
stable across runs.
"""

from __future__ import annotations

import json

from .circuits import Circuit, Gate
from .errors import DomainError, ParseError, ValidationError

FORMAT_VERSION = "1"

_TOP_KEYS = {"version", "qubits", "init", "columns"}
_GATE_KEYS = {"gate", "targets", "theta"}


def _require_int(value, what: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise ValidationError(f"{what} must be an integer, got {value!r}")
    return value


def document_to_circuit(doc) -> Circuit:
    """Validate a decoded document and build the Circuit it describes."""
    if not isinstance(doc, dict):
        raise ValidationError(f"circuit document must be an object, got {type(doc).__name__}")
    unknown = set(doc) - _TOP_KEYS
    if unknown:
        raise ValidationError(f"unknown circuit document key(s): {sorted(unknown)}")
    missing = _TOP_KEYS - set(doc)
    if missing:
        raise ValidationError(f"missing circuit document key(s): {sorted(missing)}")
    if doc["version"] != FORMAT_VERSION:
        raise ValidationError(
            f"unsupported format version {doc['version']!r}, expected {FORMAT_VERSION!r}"
        )
    qubits = _require_int(doc["qubits"], "qubits")
    if qubits < 1:
        raise ValidationError(f"qubits must be positive, got {qubits}")
    init = doc["init"]
    if not isinstance(init, list):
        raise ValidationError("init must be a list of bits")
    for i, b in enumerate(init):
        _require_int(b, f"init bit {i}")
    columns_doc = doc["columns"]
    if not isinstance(columns_doc, list):
        raise ValidationError("columns must be a list")
    columns = []
    for k, col in enumerate(columns_doc):
        if not isinstance(col, list):
            raise ValidationError(f"column {k} must be a list of gates", column=k)
        gates = []
        for record in col:
            gates.append(_record_to_gate(record, k))
        columns.append(tuple(gates))
    return Circuit(n_qubits=qubits, init=tuple(init), columns=tuple(columns))


def _record_to_gate(record, column: int) -> Gate:
    if not isinstance(record, dict):
        raise ValidationError(
            f"column {column}: gate record must be an object", column=column
        )
    unknown = set(record) - _GATE_KEYS
    if unknown:
        raise ValidationError(
            f"column {column}: unknown gate key(s): {sorted(unknown)}", column=column
        )
    if "gate" not in record or "targets" not in record:
        raise ValidationError(
            f"column {column}: gate record needs 'gate' and 'targets'", column=column
        )
    name = record["gate"]
    if not isinstance(name, str):
        raise ValidationError(
            f"column {column}: gate name must be a string, got {name!r}", column=column
        )
    targets = record["targets"]
    if not isinstance(targets, list):
        raise ValidationError(
            f"column {column}: targets must be a list", column=column
        )
    for t in targets:
        _require_int(t, f"column {column}: target")
    theta = record.get("theta")
    if theta is not None:
        if isinstance(theta, bool) or not isinstance(theta, (int, float)):
            raise ValidationError(
                f"column {column}: theta must be a number, got {theta!r}", column=column
            )
        theta = float(theta)
    try:
        return Gate(kind=name, targets=tuple(targets), theta=theta)
    except DomainError as exc:
        qubit = targets[0] if targets else None
        raise ValidationError(f"column {column}: {exc}", column=column, qubit=qubit) from exc


def circuit_to_document(c: Circuit) -> dict:
    """Canonical document dict: fixed key order, uppercase gate names."""
    columns = []
    for col in c.columns:
        records = []
        for g in col:
            record: dict = {"gate": g.kind, "targets": list(g.targets)}
            if g.theta is not None:
                record["theta"] = g.theta
            records.append(record)
        columns.append(records)
    return {
        "version": FORMAT_VERSION,
        "qubits": c.n_qubits,
        "init": list(c.init),
        "columns": columns,
    }


def parse_circuit(text: str) -> Circuit:
    """Parse circuit JSON text into a validated Circuit.

    Syntax errors raise ParseError with the 1-based line/column; semantic
    violations raise ValidationError naming the offending column/qubit.
    """
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, line=exc.lineno, column=exc.colno) from exc
    return document_to_circuit(doc)


def serialize_circuit(c: Circuit) -> str:
    """Canonical JSON text for a circuit; parse(serialize(c)) == c."""
    return json.dumps(circuit_to_document(c), separators=(",", ":"), ensure_ascii=False)
