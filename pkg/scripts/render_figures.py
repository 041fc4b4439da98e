#!/usr/bin/env python3
"""Regenerate the gallery of demo charts under out/figures/.

Covers the canonical cases: a single qubit with opposite phases, the
uniform 3-qubit superposition, the four Bell states, the double-Hadamard
trace, Hadamard transforms of all 3-bit classical inputs, and
Deutsch-Jozsa traces for a constant and a balanced oracle.
"""

from __future__ import annotations

import argparse
import math
from pathlib import Path

import numpy as np

from stateogram import (
    Circuit,
    Gate,
    OracleSpec,
    QuantumState,
    RenderStyle,
    compute_layout,
    dj_circuit,
    render_strip,
    render_svg,
    run_circuit,
)

S2 = 1 / math.sqrt(2)


def bell_states():
    """The four Bell states as explicit amplitude vectors."""
    return {
        "bell_phi_plus": np.array([S2, 0, 0, S2]),
        "bell_phi_minus": np.array([S2, 0, 0, -S2]),
        "bell_psi_plus": np.array([0, S2, S2, 0]),
        "bell_psi_minus": np.array([0, S2, -S2, 0]),
    }


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("-o", "--out", default="out/figures", help="output directory")
    args = parser.parse_args()
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)

    def write(name: str, svg: str) -> None:
        (out / name).write_text(svg, encoding="utf-8")
        print(f"wrote {out / name}")

    # single qubit, phases +pi/2 and -pi/2
    single = QuantumState(1, np.array([1j, -1j]) * S2)
    write("single_qubit.svg", render_svg(compute_layout(single), RenderStyle(title="single qubit")))

    # uniform 3-qubit superposition with alternating-pair signs
    signs = np.array([1, -1, -1, 1, 1, -1, -1, 1])
    uniform = QuantumState(3, signs * 1j / math.sqrt(8))
    write("three_qubit_uniform.svg", render_svg(compute_layout(uniform)))

    for name, amps in bell_states().items():
        write(f"{name}.svg", render_svg(compute_layout(QuantumState(2, amps)), RenderStyle(title=name)))

    # double Hadamard on one qubit: |0> -> superposition -> |0>
    hh = Circuit(1, (0,), ((Gate("H", (0,)),), (Gate("H", (0,)),)))
    write("hadamard_twice.svg", render_strip([s.layout for s in run_circuit(hh)]))

    # Hadamard transforms of all 8 classical 3-qubit inputs
    for y in range(8):
        h_all = tuple(Gate("H", (q,)) for q in range(3))
        c = Circuit(3, tuple((y >> q) & 1 for q in range(3)), (h_all,))
        write(f"hadamard3_input{y:03b}.svg", render_strip([s.layout for s in run_circuit(c)]))

    # Deutsch-Jozsa traces
    for label, spec in [
        ("dj_constant0", OracleSpec.constant(0)),
        ("dj_balanced_mask1", OracleSpec.balanced(1)),
    ]:
        steps = run_circuit(dj_circuit(spec, 3))
        write(f"{label}.svg", render_strip([s.layout for s in steps]))
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
