"""stateogram: statevector simulation with phase-angle stacked-bar charts."""

from .circuit_io import (
    FORMAT_VERSION,
    circuit_to_document,
    document_to_circuit,
    parse_circuit,
    serialize_circuit,
)
from .circuits import (
    GATE_ARITY,
    Circuit,
    Gate,
    OracleSpec,
    TraceStep,
    apply_gate,
    dj_circuit,
    dj_oracle,
    gate_matrix_oracle,
    hadamard_all,
    run_circuit,
)
from .errors import (
    DomainError,
    ParseError,
    ResourceLimitError,
    UndefinedPhaseError,
    ValidationError,
)
from .layout import Bar, StateogramLayout, color_for_rank, compute_layout, ket_label
from .state import (
    VANISH_THRESHOLD,
    QuantumState,
    basis_state,
    marginal_probability,
    phase_angle,
    probability,
)
from .svg import ChartGeometry, RenderStyle, chart_geometry, render_strip, render_svg
from .trace import build_trace_document, canonical_json, trace_json

__version__ = "0.1.0"

__all__ = [
    "FORMAT_VERSION",
    "GATE_ARITY",
    "VANISH_THRESHOLD",
    "Bar",
    "ChartGeometry",
    "Circuit",
    "DomainError",
    "Gate",
    "OracleSpec",
    "ParseError",
    "QuantumState",
    "RenderStyle",
    "ResourceLimitError",
    "StateogramLayout",
    "TraceStep",
    "UndefinedPhaseError",
    "ValidationError",
    "apply_gate",
    "basis_state",
    "build_trace_document",
    "canonical_json",
    "chart_geometry",
    "circuit_to_document",
    "color_for_rank",
    "compute_layout",
    "dj_circuit",
    "dj_oracle",
    "document_to_circuit",
    "gate_matrix_oracle",
    "hadamard_all",
    "ket_label",
    "marginal_probability",
    "parse_circuit",
    "phase_angle",
    "probability",
    "render_strip",
    "render_svg",
    "run_circuit",
    "serialize_circuit",
    "trace_json",
]
