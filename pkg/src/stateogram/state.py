"""Multi-qubit statevector representation.

Amplitudes are plain ``complex`` values. Basis index convention is
little-endian: qubit ``i`` occupies bit ``i`` of the index, so the ket
label ``|x_{n-1}...x_1 x_0>`` reads most-significant qubit first while
``x_0`` is bit 0. Exact zeros stay exact; an amplitude counts as
vanishing when its probability drops below ``VANISH_THRESHOLD``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from .errors import DomainError, UndefinedPhaseError

# Probability below which an amplitude is treated as vanishing. Separates
# exact-zero algebraic results from accumulated float noise at n <= 10.
VANISH_THRESHOLD = 1e-9

NORM_ATOL = 1e-10


@dataclass(frozen=True, eq=False)
class QuantumState:
    """Normalized vector of ``2**n_qubits`` complex amplitudes.

    Immutable once constructed; operations return new states.
    """

    n_qubits: int
    amps: np.ndarray = field(repr=False)

    def __post_init__(self):
        if self.n_qubits < 1:
            raise DomainError(f"n_qubits must be positive, got {self.n_qubits}")
        amps = np.array(self.amps, dtype=np.complex128)
        if amps.shape != (2**self.n_qubits,):
            raise DomainError(
                f"expected {2**self.n_qubits} amplitudes for {self.n_qubits} qubits, "
                f"got {amps.shape}"
            )
        total = float(np.sum(amps.real**2 + amps.imag**2))
        if abs(total - 1.0) > NORM_ATOL:
            raise DomainError(f"state is not normalized: sum of probabilities = {total!r}")
        amps.flags.writeable = False
        object.__setattr__(self, "amps", amps)

    @property
    def dim(self) -> int:
        return 2**self.n_qubits

    def probabilities(self) -> np.ndarray:
        """Measurement probability of every basis state, in basis order."""
        return self.amps.real**2 + self.amps.imag**2

    def to_json_dict(self) -> dict:
        """State JSON form: ``{"n": int, "amps": [[re, im], ...]}``."""
        return {
            "n": self.n_qubits,
            "amps": [[float(a.real), float(a.imag)] for a in self.amps],
        }

    @classmethod
    def from_json_dict(cls, doc: dict) -> "QuantumState":
        amps = np.array([complex(re, im) for re, im in doc["amps"]], dtype=np.complex128)
        return cls(int(doc["n"]), amps)


def basis_state(n_qubits: int, index: int) -> QuantumState:
    """Computational basis state |index> on ``n_qubits`` qubits."""
    if n_qubits < 1:
        raise DomainError(f"n_qubits must be positive, got {n_qubits}")
    if not 0 <= index < 2**n_qubits:
        raise DomainError(f"basis index {index} out of range for {n_qubits} qubits")
    amps = np.zeros(2**n_qubits, dtype=np.complex128)
    amps[index] = 1.0
    return QuantumState(n_qubits, amps)


def probability(a: complex) -> float:
    """Measurement probability |a|^2 of an amplitude."""
    a = complex(a)
    return a.real * a.real + a.imag * a.imag


def phase_angle(a: complex) -> float:
    """Argument of a non-vanishing amplitude, in (-pi, pi].

    atan2 yields [-pi, pi]; exactly -pi is normalized to +pi so that a
    pure negative-real amplitude sits at the right chart edge.
    """
    a = complex(a)
    if probability(a) < VANISH_THRESHOLD:
        raise UndefinedPhaseError(f"phase of vanishing amplitude {a!r} is undefined")
    angle = math.atan2(a.imag, a.real)
    if angle == -math.pi:
        return math.pi
    return angle


def marginal_probability(
    s: QuantumState, qubits: Sequence[int], outcome: Sequence[int]
) -> float:
    """Probability that measuring ``qubits`` yields the bits in ``outcome``.

    ``outcome[k]`` is the required value of ``qubits[k]``; the remaining
    qubits are summed over.
    """
    qubits = list(qubits)
    outcome = list(outcome)
    if len(set(qubits)) != len(qubits):
        raise DomainError(f"duplicate qubit index in {qubits}")
    for q in qubits:
        if not 0 <= q < s.n_qubits:
            raise DomainError(f"qubit index {q} out of range for {s.n_qubits} qubits")
    if len(outcome) != len(qubits):
        raise DomainError(
            f"outcome has {len(outcome)} bits for {len(qubits)} qubits"
        )
    for b in outcome:
        if b not in (0, 1):
            raise DomainError(f"outcome bits must be 0 or 1, got {b!r}")
    mask = 0
    value = 0
    for q, b in zip(qubits, outcome):
        mask |= 1 << q
        value |= b << q
    idx = np.arange(s.dim)
    sel = (idx & mask) == value
    return float(np.sum(s.probabilities()[sel]))
