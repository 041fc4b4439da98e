"""Gate definitions, column-structured circuits, and two simulation routes.

The fast route (``apply_gate``/``run_circuit``) updates amplitude pairs
in place with stride-``2**t`` sweeps and never materializes a matrix.
``gate_matrix_oracle`` is the slow verification route: it builds each
column's full unitary from explicit Kronecker products and multiplies it
out, so the two routes share nothing but the 2x2 gate constants.

Columns are simultaneous: within one column no qubit may be targeted
twice, so listed order never matters physically.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field

import numpy as np

from .errors import DomainError, ResourceLimitError, ValidationError
from .layout import StateogramLayout, compute_layout
from .state import QuantumState, basis_state

_SQRT2_INV = 1.0 / math.sqrt(2.0)

GATE_ARITY = {
    "H": 1,
    "X": 1,
    "Y": 1,
    "Z": 1,
    "S": 1,
    "SDG": 1,
    "T": 1,
    "TDG": 1,
    "PHASE": 1,
    "CNOT": 2,
    "CZ": 2,
    "SWAP": 2,
    "CCNOT": 3,
}

_MAT_1Q = {
    "H": np.array([[1, 1], [1, -1]], dtype=complex) * _SQRT2_INV,
    "X": np.array([[0, 1], [1, 0]], dtype=complex),
    "Y": np.array([[0, -1j], [1j, 0]], dtype=complex),
    "Z": np.array([[1, 0], [0, -1]], dtype=complex),
    "S": np.array([[1, 0], [0, 1j]], dtype=complex),
    "SDG": np.array([[1, 0], [0, -1j]], dtype=complex),
    "T": np.array([[1, 0], [0, cmath.exp(1j * math.pi / 4)]], dtype=complex),
    "TDG": np.array([[1, 0], [0, cmath.exp(-1j * math.pi / 4)]], dtype=complex),
}


def _mat_1q(kind: str, theta: float | None) -> np.ndarray:
    if kind == "PHASE":
        return np.array([[1, 0], [0, cmath.exp(1j * theta)]], dtype=complex)
    return _MAT_1Q[kind]


@dataclass(frozen=True)
class Gate:
    """A gate placement: kind plus target qubits (controls listed first)."""

    kind: str
    targets: tuple[int, ...]
    theta: float | None = None

    def __post_init__(self):
        kind = self.kind.upper()
        object.__setattr__(self, "kind", kind)
        object.__setattr__(self, "targets", tuple(int(t) for t in self.targets))
        if kind not in GATE_ARITY:
            raise DomainError(f"unknown gate kind {self.kind!r}")
        if len(self.targets) != GATE_ARITY[kind]:
            raise DomainError(
                f"{kind} takes {GATE_ARITY[kind]} target(s), got {len(self.targets)}"
            )
        if len(set(self.targets)) != len(self.targets):
            raise DomainError(f"{kind} targets must be distinct, got {self.targets}")
        if any(t < 0 for t in self.targets):
            raise DomainError(f"negative target index in {self.targets}")
        if kind == "PHASE":
            if self.theta is None:
                raise DomainError("PHASE requires a theta angle")
            object.__setattr__(self, "theta", float(self.theta))
        elif self.theta is not None:
            raise DomainError(f"{kind} takes no theta angle")


@dataclass(frozen=True)
class Circuit:
    """Ordered gate columns over ``n_qubits`` qubits with classical init bits."""

    n_qubits: int
    init: tuple[int, ...]
    columns: tuple[tuple[Gate, ...], ...]

    def __post_init__(self):
        if self.n_qubits < 1:
            raise ValidationError(f"n_qubits must be positive, got {self.n_qubits}")
        init = tuple(self.init)
        if len(init) != self.n_qubits:
            raise ValidationError(
                f"init has {len(init)} bits for {self.n_qubits} qubits"
            )
        for i, b in enumerate(init):
            if b not in (0, 1) or isinstance(b, bool):
                raise ValidationError(f"init bit for qubit {i} must be 0 or 1, got {b!r}", qubit=i)
        columns = tuple(tuple(col) for col in self.columns)
        for k, col in enumerate(columns):
            used: set[int] = set()
            for g in col:
                for t in g.targets:
                    if t >= self.n_qubits:
                        raise ValidationError(
                            f"column {k}: qubit {t} out of range for {self.n_qubits} qubits",
                            column=k,
                            qubit=t,
                        )
                    if t in used:
                        raise ValidationError(
                            f"column {k}: qubit {t} targeted more than once",
                            column=k,
                            qubit=t,
                        )
                    used.add(t)
        object.__setattr__(self, "init", init)
        object.__setattr__(self, "columns", columns)

    @property
    def initial_index(self) -> int:
        return sum(b << i for i, b in enumerate(self.init))


@dataclass(frozen=True)
class TraceStep:
    """State snapshot after ``column_index`` columns (0 = before any)."""

    column_index: int
    state: QuantumState = field(repr=False)
    layout: StateogramLayout = field(repr=False)


def _check_targets(s: QuantumState, g: Gate) -> None:
    for t in g.targets:
        if t >= s.n_qubits:
            raise DomainError(
                f"gate target {t} out of range for {s.n_qubits} qubits"
            )


def apply_gate(s: QuantumState, g: Gate) -> QuantumState:
    """Apply one gate, returning a new state; the input is untouched."""
    _check_targets(s, g)
    amps = s.amps.copy()
    idx = np.arange(amps.size)
    if GATE_ARITY[g.kind] == 1:
        (t,) = g.targets
        u = _mat_1q(g.kind, g.theta)
        i0 = idx[(idx >> t) & 1 == 0]
        i1 = i0 | (1 << t)
        a, b = amps[i0], amps[i1]
        amps[i0] = u[0, 0] * a + u[0, 1] * b
        amps[i1] = u[1, 0] * a + u[1, 1] * b
    elif g.kind == "CNOT":
        c, t = g.targets
        sel = idx[((idx >> c) & 1 == 1) & ((idx >> t) & 1 == 0)]
        flip = sel | (1 << t)
        amps[sel], amps[flip] = amps[flip], amps[sel].copy()
    elif g.kind == "CZ":
        a_, b_ = g.targets
        sel = idx[((idx >> a_) & 1 == 1) & ((idx >> b_) & 1 == 1)]
        amps[sel] *= -1
    elif g.kind == "SWAP":
        a_, b_ = g.targets
        sel = idx[((idx >> a_) & 1 == 1) & ((idx >> b_) & 1 == 0)]
        other = sel ^ ((1 << a_) | (1 << b_))
        amps[sel], amps[other] = amps[other], amps[sel].copy()
    else:  # CCNOT
        c1, c2, t = g.targets
        sel = idx[
            ((idx >> c1) & 1 == 1) & ((idx >> c2) & 1 == 1) & ((idx >> t) & 1 == 0)
        ]
        flip = sel | (1 << t)
        amps[sel], amps[flip] = amps[flip], amps[sel].copy()
    return QuantumState(s.n_qubits, amps)


def hadamard_all(s: QuantumState) -> QuantumState:
    """Apply a Hadamard to every qubit.

    For basis input |y> the output amplitude at |x> is
    ``2**(-n/2) * (-1)**popcount(x & y)``.
    """
    for q in range(s.n_qubits):
        s = apply_gate(s, Gate("H", (q,)))
    return s


def run_circuit(c: Circuit) -> list[TraceStep]:
    """Simulate column by column; step k is the state after k columns."""
    s = basis_state(c.n_qubits, c.initial_index)
    steps = [TraceStep(0, s, compute_layout(s))]
    for k, col in enumerate(c.columns, start=1):
        for g in col:
            s = apply_gate(s, g)
        steps.append(TraceStep(k, s, compute_layout(s)))
    return steps


# --- Deutsch-Jozsa builders -------------------------------------------------

@dataclass(frozen=True)
class OracleSpec:
    """Hidden Boolean function on the argument register (qubits 1..n-1).

    ``constant0``/``constant1`` ignore the arguments. ``balanced``
    computes ``parity(args & mask) ^ negate``; any nonzero mask yields a
    balanced function.
    """

    kind: str
    mask: int = 0
    negate: int = 0

    def __post_init__(self):
        if self.kind not in ("constant0", "constant1", "balanced"):
            raise DomainError(f"unknown oracle kind {self.kind!r}")
        if self.negate not in (0, 1):
            raise DomainError(f"negate must be 0 or 1, got {self.negate!r}")

    @classmethod
    def constant(cls, value: int) -> "OracleSpec":
        if value not in (0, 1):
            raise DomainError(f"constant value must be 0 or 1, got {value!r}")
        return cls("constant1" if value else "constant0")

    @classmethod
    def balanced(cls, mask: int, negate: int = 0) -> "OracleSpec":
        return cls("balanced", mask=mask, negate=negate)

    def truth_table(self, n_qubits: int) -> list[int]:
        """f(a) for every argument value a in 0..2**(n-1)-1."""
        n_args = n_qubits - 1
        if self.kind == "constant0":
            return [0] * (1 << n_args)
        if self.kind == "constant1":
            return [1] * (1 << n_args)
        return [
            (a & self.mask).bit_count() % 2 ^ self.negate for a in range(1 << n_args)
        ]


def dj_oracle(spec: OracleSpec, n_qubits: int) -> tuple[tuple[Gate, ...], ...]:
    """Columns computing |args>|x0> -> |args>|x0 XOR f(args)>.

    Balanced oracles place one CNOT per mask bit (argument qubit i feeds
    qubit 0 when bit i-1 of the mask is set) plus an X when negated; all
    touch qubit 0, so each lands in its own column.
    """
    if n_qubits < 2:
        raise DomainError(f"oracle needs at least 2 qubits, got {n_qubits}")
    if spec.kind == "constant0":
        return ()
    if spec.kind == "constant1":
        return ((Gate("X", (0,)),),)
    n_args = n_qubits - 1
    if spec.mask == 0:
        raise DomainError("mask 0 yields a constant function, not balanced")
    if not 0 < spec.mask < (1 << n_args):
        raise DomainError(
            f"mask {spec.mask} out of range for {n_args} argument qubits"
        )
    columns = [
        (Gate("CNOT", (j + 1, 0)),) for j in range(n_args) if (spec.mask >> j) & 1
    ]
    if spec.negate:
        columns.append((Gate("X", (0,)),))
    return tuple(columns)


def dj_circuit(spec: OracleSpec, n_qubits: int) -> Circuit:
    """Full Deutsch-Jozsa circuit: H everywhere, the oracle, H on the args.

    Qubit 0 starts at |1> and carries the function value; measuring the
    argument register at the end gives all zeros exactly for constant
    oracles and never for balanced ones.
    """
    if n_qubits < 2:
        raise DomainError(f"Deutsch-Jozsa needs at least 2 qubits, got {n_qubits}")
    oracle_columns = dj_oracle(spec, n_qubits)
    h_all = tuple(Gate("H", (q,)) for q in range(n_qubits))
    h_args = tuple(Gate("H", (q,)) for q in range(1, n_qubits))
    return Circuit(
        n_qubits=n_qubits,
        init=(1,) + (0,) * (n_qubits - 1),
        columns=(h_all,) + oracle_columns + (h_args,),
    )


# --- Dense-matrix verification route ----------------------------------------

_DENSE_MAX_QUBITS = 10

_P0 = np.array([[1, 0], [0, 0]], dtype=complex)
_P1 = np.array([[0, 0], [0, 1]], dtype=complex)


def _kron_at(m: np.ndarray, target: int, n: int) -> np.ndarray:
    """Embed a 1-qubit matrix at ``target`` via an explicit Kronecker chain."""
    u = np.eye(1, dtype=complex)
    for q in range(n - 1, -1, -1):
        u = np.kron(u, m if q == target else np.eye(2, dtype=complex))
    return u


def _dense_gate(g: Gate, n: int) -> np.ndarray:
    """Full 2**n x 2**n unitary of one gate, built from Kronecker products."""
    if GATE_ARITY[g.kind] == 1:
        return _kron_at(_mat_1q(g.kind, g.theta), g.targets[0], n)
    dim = 1 << n
    eye = np.eye(dim, dtype=complex)
    if g.kind == "CNOT":
        c, t = g.targets
        return _kron_at(_P0, c, n) + _kron_at(_P1, c, n) @ _kron_at(_MAT_1Q["X"], t, n)
    if g.kind == "CZ":
        a, b = g.targets
        return _kron_at(_P0, a, n) + _kron_at(_P1, a, n) @ _kron_at(_MAT_1Q["Z"], b, n)
    if g.kind == "SWAP":
        a, b = g.targets
        total = np.zeros((dim, dim), dtype=complex)
        for pauli in ("X", "Y", "Z"):
            total += _kron_at(_MAT_1Q[pauli], a, n) @ _kron_at(_MAT_1Q[pauli], b, n)
        return (eye + total) / 2
    # CCNOT = (I - P1P1) + P1P1 * X_t
    c1, c2, t = g.targets
    both = _kron_at(_P1, c1, n) @ _kron_at(_P1, c2, n)
    return (eye - both) + both @ _kron_at(_MAT_1Q["X"], t, n)


def gate_matrix_oracle(c: Circuit) -> list[QuantumState]:
    """Brute-force per-step states via dense column unitaries.

    Independent of ``run_circuit``'s stride sweeps; intended purely for
    cross-checking. Guarded to small registers because each column costs
    a dense 2**n x 2**n build.
    """
    if c.n_qubits > _DENSE_MAX_QUBITS:
        raise ResourceLimitError(
            f"dense verification supports at most {_DENSE_MAX_QUBITS} qubits, "
            f"got {c.n_qubits}"
        )
    vec = np.zeros(1 << c.n_qubits, dtype=complex)
    vec[c.initial_index] = 1.0
    states = [QuantumState(c.n_qubits, vec)]
    for col in c.columns:
        u = np.eye(1 << c.n_qubits, dtype=complex)
        for g in col:
            u = _dense_gate(g, c.n_qubits) @ u
        vec = u @ vec
        states.append(QuantumState(c.n_qubits, vec))
    return states
