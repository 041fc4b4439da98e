#!/usr/bin/env python3
"""Sweep every parity oracle through the Deutsch-Jozsa circuit.

Prints P(argument register = 0...0) for both constants and all balanced
masks; the value is 1 exactly for constant oracles and 0 for balanced
ones, so a single measurement classifies the oracle.
"""

from __future__ import annotations

import argparse
import time

from stateogram import OracleSpec, dj_circuit, marginal_probability, run_circuit


def sweep(n_qubits: int) -> None:
    arg_qubits = list(range(1, n_qubits))
    zeros = [0] * (n_qubits - 1)
    specs = [OracleSpec.constant(0), OracleSpec.constant(1)]
    specs += [
        OracleSpec.balanced(mask, negate)
        for mask in range(1, 2 ** (n_qubits - 1))
        for negate in (0, 1)
    ]
    print(f"n={n_qubits}: {len(specs)} oracles")
    for spec in specs:
        start = time.perf_counter()
        final = run_circuit(dj_circuit(spec, n_qubits))[-1].state
        p = marginal_probability(final, arg_qubits, zeros)
        elapsed = (time.perf_counter() - start) * 1e3
        if spec.kind == "balanced":
            name = f"balanced(mask={spec.mask:0{n_qubits - 1}b}, negate={spec.negate})"
        else:
            name = spec.kind
        verdict = "constant" if p > 0.5 else "balanced"
        print(f"  {name:<34} P={p:.12f}  -> {verdict}  ({elapsed:.2f} ms)")


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-n", type=int, default=5, help="largest register to sweep")
    args = parser.parse_args()
    for n in range(2, args.max_n + 1):
        sweep(n)
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
