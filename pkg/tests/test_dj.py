"""Deutsch-Jozsa oracle builders and the constant/balanced separation."""

import itertools

import numpy as np
import pytest

from helpers import S2
from stateogram import (
    Circuit,
    DomainError,
    Gate,
    OracleSpec,
    basis_state,
    dj_circuit,
    dj_oracle,
    gate_matrix_oracle,
    marginal_probability,
    run_circuit,
)


def oracle_truth_table_by_simulation(spec, n_qubits):
    """Read f off the oracle circuit itself: |args>|0> -> |args>|f(args)>.

    Independent of the parity formula the builder uses internally.
    """
    columns = dj_oracle(spec, n_qubits)
    values = []
    for args in range(2 ** (n_qubits - 1)):
        state = basis_state(n_qubits, args << 1)
        for col in columns:
            for g in col:
                from stateogram import apply_gate

                state = apply_gate(state, g)
        (index,) = np.nonzero(np.abs(state.amps) > 0.5)[0].tolist()
        assert index >> 1 == args  # argument register untouched
        values.append(index & 1)
    return values


class TestDjOracle:
    def test_constant0_is_empty(self):
        assert dj_oracle(OracleSpec.constant(0), 3) == ()

    def test_constant1_is_single_x(self):
        columns = dj_oracle(OracleSpec.constant(1), 3)
        assert columns == ((Gate("X", (0,)),),)

    def test_balanced_mask1_truth_table(self):
        values = oracle_truth_table_by_simulation(OracleSpec.balanced(1), 3)
        assert values == [0, 1, 0, 1]

    def test_balanced_mask2_truth_table(self):
        values = oracle_truth_table_by_simulation(OracleSpec.balanced(2), 3)
        assert values == [0, 0, 1, 1]

    def test_negate_flips_every_value(self):
        plain = oracle_truth_table_by_simulation(OracleSpec.balanced(3, 0), 3)
        negated = oracle_truth_table_by_simulation(OracleSpec.balanced(3, 1), 3)
        assert [1 - v for v in plain] == negated

    @pytest.mark.parametrize("mask,negate", list(itertools.product([1, 2, 3], [0, 1])))
    def test_all_six_oracles_are_balanced(self, mask, negate):
        values = oracle_truth_table_by_simulation(OracleSpec.balanced(mask, negate), 3)
        assert values.count(0) == 2 and values.count(1) == 2

    def test_simulated_tables_match_parity_definition(self):
        for mask, negate in itertools.product([1, 2, 3], [0, 1]):
            spec = OracleSpec.balanced(mask, negate)
            assert oracle_truth_table_by_simulation(spec, 3) == spec.truth_table(3)

    def test_oracle_xors_into_occupied_answer_bit(self):
        # |args>|1> -> |args>|1 XOR f(args)>
        spec = OracleSpec.balanced(3)
        table = spec.truth_table(3)
        from stateogram import apply_gate

        for args in range(4):
            state = basis_state(3, (args << 1) | 1)
            for col in dj_oracle(spec, 3):
                for g in col:
                    state = apply_gate(state, g)
            (index,) = np.nonzero(np.abs(state.amps) > 0.5)[0].tolist()
            assert index == (args << 1) | (1 ^ table[args])

    def test_mask_zero_rejected(self):
        with pytest.raises(DomainError):
            dj_oracle(OracleSpec.balanced(0), 3)

    def test_mask_out_of_range_rejected(self):
        with pytest.raises(DomainError):
            dj_oracle(OracleSpec.balanced(4), 3)

    def test_balanced_cnots_target_answer_qubit(self):
        columns = dj_oracle(OracleSpec.balanced(3, 1), 3)
        kinds = [g.kind for col in columns for g in col]
        assert kinds == ["CNOT", "CNOT", "X"]
        assert all(col[0].targets[-1] == 0 for col in columns)


class TestDjCircuit:
    def test_structure(self):
        c = dj_circuit(OracleSpec.constant(0), 3)
        assert c.init == (1, 0, 0)
        assert len(c.columns) == 2  # H-all then H-args, empty oracle
        assert [g.kind for g in c.columns[0]] == ["H", "H", "H"]
        assert [g.targets[0] for g in c.columns[-1]] == [1, 2]

    def test_constant0_final_state(self):
        steps = run_circuit(dj_circuit(OracleSpec.constant(0), 3))
        expected = np.zeros(8, dtype=complex)
        expected[0], expected[1] = S2, -S2
        np.testing.assert_allclose(steps[-1].state.amps, expected, atol=1e-10)

    def test_constant1_final_state_is_global_sign_flip(self):
        # dense-route derivation: the X inside the oracle flips the overall sign
        c = dj_circuit(OracleSpec.constant(1), 3)
        dense = gate_matrix_oracle(c)[-1].amps
        expected = np.zeros(8, dtype=complex)
        expected[0], expected[1] = -S2, S2
        np.testing.assert_allclose(dense, expected, atol=1e-10)
        np.testing.assert_allclose(run_circuit(c)[-1].state.amps, dense, atol=1e-12)

    def test_constant_marginal_is_one(self):
        for value in (0, 1):
            steps = run_circuit(dj_circuit(OracleSpec.constant(value), 3))
            p = marginal_probability(steps[-1].state, [1, 2], [0, 0])
            assert p == pytest.approx(1.0, abs=1e-10)

    def test_balanced_marginal_is_zero(self):
        for mask, negate in itertools.product([1, 2, 3], [0, 1]):
            steps = run_circuit(dj_circuit(OracleSpec.balanced(mask, negate), 3))
            p = marginal_probability(steps[-1].state, [1, 2], [0, 0])
            assert p == pytest.approx(0.0, abs=1e-10)

    def test_balanced_interference_cancels_indices_0_and_1(self):
        for mask in (1, 2, 3):
            final = run_circuit(dj_circuit(OracleSpec.balanced(mask), 3))[-1].state
            assert abs(final.amps[0]) < 1e-10
            assert abs(final.amps[1]) < 1e-10
            dense = gate_matrix_oracle(dj_circuit(OracleSpec.balanced(mask), 3))[-1]
            assert abs(dense.amps[0]) < 1e-12
            assert abs(dense.amps[1]) < 1e-12

    def test_too_few_qubits_rejected(self):
        with pytest.raises(DomainError):
            dj_circuit(OracleSpec.constant(0), 1)

    def test_constant_value_validation(self):
        with pytest.raises(DomainError):
            OracleSpec.constant(2)
