"""State-o-gram layout: pure geometry/color description of a state chart.

A state-o-gram places one stacked bar per non-vanishing basis state:
x position is the amplitude's phase angle over (-pi, pi], bar height is
the measurement probability, and bars stack bottom-up in basis order so
the full chart always spans [0, 1]. Vanishing states are listed
separately instead of drawn. No drawing happens here; see ``svg``.
"""

from __future__ import annotations

import colorsys
import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError
from .state import VANISH_THRESHOLD, QuantumState

#: Hue sweep from blue (rank 0) to red (last rank), degrees.
_HUE_BLUE = 240.0
_HUE_RED = 0.0
_COLOR_VALUE = 0.85


@dataclass(frozen=True)
class Bar:
    """One stacked bar of a state-o-gram."""

    basis_index: int
    ket_label: str
    angle: float
    height: float
    y_offset: float
    color: tuple[int, int, int]
    nonzero_rank: int


@dataclass(frozen=True)
class StateogramLayout:
    """Bars in basis order plus the labels of vanishing basis states.

    The axis ranges are fixed: x spans (-pi, pi], y spans [0, 1].
    """

    n_qubits: int
    bars: tuple[Bar, ...]
    vanishing: tuple[str, ...]

    @property
    def x_range(self) -> tuple[float, float]:
        return (-math.pi, math.pi)

    @property
    def y_range(self) -> tuple[float, float]:
        return (0.0, 1.0)

    def to_json_dict(self) -> dict:
        """Layout JSON: ``{"n", "bars": [{"b","label","angle","h","y","rgb"}], "vanishing"}``."""
        return {
            "n": self.n_qubits,
            "bars": [
                {
                    "b": bar.basis_index,
                    "label": bar.ket_label,
                    "angle": bar.angle,
                    "h": bar.height,
                    "y": bar.y_offset,
                    "rgb": list(bar.color),
                }
                for bar in self.bars
            ],
            "vanishing": list(self.vanishing),
        }


def ket_label(basis_index: int, n_qubits: int) -> str:
    """Ket string for a basis index, most-significant qubit first."""
    if n_qubits < 1:
        raise DomainError(f"n_qubits must be positive, got {n_qubits}")
    if not 0 <= basis_index < 2**n_qubits:
        raise DomainError(
            f"basis index {basis_index} out of range for {n_qubits} qubits"
        )
    return "|" + format(basis_index, f"0{n_qubits}b") + "⟩"


def color_for_rank(rank: int, nonzero_count: int) -> tuple[int, int, int]:
    """Bar color by rank among non-vanishing states: blue shading to red.

    A single non-vanishing state is drawn blue.
    """
    if not 0 <= rank < nonzero_count:
        raise DomainError(f"rank {rank} out of range for {nonzero_count} bars")
    if nonzero_count == 1:
        hue = _HUE_BLUE
    else:
        frac = rank / (nonzero_count - 1)
        hue = _HUE_BLUE + (_HUE_RED - _HUE_BLUE) * frac
    r, g, b = colorsys.hsv_to_rgb(hue / 360.0, 1.0, _COLOR_VALUE)
    return (round(r * 255), round(g * 255), round(b * 255))


def compute_layout(s: QuantumState) -> StateogramLayout:
    """Lay out a normalized state as stacked bars plus a vanishing list.

    Bars keep basis order; each bar starts at the accumulated height of
    all lower-index bars (running float sum, so the stacking partition is
    exact). Sub-threshold states contribute no height at all.
    """
    probs = s.probabilities()
    keep = probs >= VANISH_THRESHOLD
    nonzero = np.nonzero(keep)[0]
    selected = s.amps[nonzero]
    angles = np.arctan2(selected.imag, selected.real)
    angles[angles == -math.pi] = math.pi
    count = int(nonzero.size)
    bars = []
    offset = 0.0
    for rank, (b, angle) in enumerate(zip(nonzero.tolist(), angles.tolist())):
        height = float(probs[b])
        bars.append(
            Bar(
                basis_index=b,
                ket_label=ket_label(b, s.n_qubits),
                angle=angle,
                height=height,
                y_offset=offset,
                color=color_for_rank(rank, count),
                nonzero_rank=rank,
            )
        )
        offset += height
    vanishing = tuple(
        ket_label(b, s.n_qubits) for b in np.nonzero(~keep)[0].tolist()
    )
    return StateogramLayout(n_qubits=s.n_qubits, bars=tuple(bars), vanishing=vanishing)
