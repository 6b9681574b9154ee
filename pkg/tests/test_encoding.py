"""Operator embedding, rotation synthesis, and circuit/matrix equivalence."""

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cosmopair.background import ModeParams
from cosmopair.circuits import Circuit
from cosmopair.encoding import (
    PauliString,
    aq_pauli_sum,
    build_full_circuit,
    pauli_to_matrix,
    phase_aligned_distance,
    synthesize_pauli_rotation,
    synthesize_step,
    zq_pauli_sum,
)
from cosmopair.schedule import build_schedule
from cosmopair.statevector import circuit_unitary, probabilities, run_circuit
from cosmopair.subspace import A_PHYS, PHYS_INDICES, Z_PHYS, evolve, strang_step_unitary

IDX = np.array(PHYS_INDICES)


def restrict(m: np.ndarray) -> np.ndarray:
    return m[np.ix_(IDX, IDX)]


class TestPauliTables:
    def test_number_operator_term_structure(self):
        terms = list(zq_pauli_sum())
        assert len(terms) == 7
        assert terms[0].letters == "IIII" and terms[0].coeff == 0.5
        singles = {t.letters: t.coeff for t in terms[1:5]}
        assert singles == {"ZIII": -0.25, "IZII": 0.25, "IIZI": -0.25, "IIIZ": 0.25}
        doubles = {t.letters: t.coeff for t in terms[5:]}
        assert doubles == {"ZZII": -0.25, "IIZZ": -0.25}

    def test_pair_operator_term_structure(self):
        terms = list(aq_pauli_sum())
        assert len(terms) == 8
        for t in terms:
            assert abs(t.coeff) == 0.125
            assert set(t.letters) <= {"X", "Y"}
            assert t.letters.count("Y") % 2 == 0

    def test_pair_terms_mutually_commute(self):
        mats = [pauli_to_matrix(t, 4) for t in aq_pauli_sum()]
        for i, a in enumerate(mats):
            for b in mats[i + 1 :]:
                assert np.max(np.abs(a @ b - b @ a)) < 1e-14


class TestDenseExpansion:
    def test_leftmost_factor_convention(self):
        # Z on qubit 0 of a 2-qubit register acts on the leading index bit.
        m = pauli_to_matrix(PauliString("ZI", 1.0), 2)
        assert np.array_equal(np.diag(m).real, [1, 1, -1, -1])

    def test_hermiticity(self):
        for p in (zq_pauli_sum(), aq_pauli_sum()):
            m = pauli_to_matrix(p, 4)
            assert np.max(np.abs(m - m.conj().T)) < 1e-14

    def test_number_operator_restriction(self):
        sub = restrict(pauli_to_matrix(zq_pauli_sum(), 4))
        assert np.array_equal(sub.real, Z_PHYS)
        assert not np.any(sub.imag)

    def test_pair_operator_restriction_and_offsubspace(self):
        dense = pauli_to_matrix(aq_pauli_sum(), 4)
        sub = restrict(dense)
        assert np.array_equal(sub.real, A_PHYS)
        assert sub[0, 3] == 1.0  # vacuum <-> pair element
        # Embedding is exactly the rank-two swap: nothing anywhere else.
        off = dense.copy()
        off[np.ix_(IDX, IDX)] = 0.0
        assert not np.any(off)

    def test_rejects_large_register(self):
        with pytest.raises(ValueError):
            pauli_to_matrix(PauliString("Z" * 13, 1.0), 13)


class TestRotationSynthesis:
    def test_rejects_identity_string(self):
        with pytest.raises(ValueError):
            synthesize_pauli_rotation(PauliString("IIII", 1.0), 0.1)

    def test_zero_angle_is_identity(self):
        c = Circuit(n_qubits=4)
        c.extend(synthesize_pauli_rotation(PauliString("XYZI", 1.0), 0.0))
        assert phase_aligned_distance(circuit_unitary(c), np.eye(16)) < 1e-12

    def test_zz_half_turn(self):
        c = Circuit(n_qubits=2)
        c.extend(synthesize_pauli_rotation(PauliString("ZZ", 1.0), np.pi / 2))
        target = -1j * pauli_to_matrix(PauliString("ZZ", 1.0), 2)
        assert phase_aligned_distance(circuit_unitary(c), target) < 1e-12

    def test_four_qubit_x_string(self):
        p = PauliString("XXXX", 1.0)
        c = Circuit(n_qubits=4)
        c.extend(synthesize_pauli_rotation(p, 0.1))
        expected = np.cos(0.1) * np.eye(16) - 1j * np.sin(0.1) * pauli_to_matrix(p, 4)
        assert np.max(np.abs(circuit_unitary(c) - expected)) < 1e-12

    @settings(deadline=None, max_examples=40)
    @given(
        letters=st.text(alphabet="IXYZ", min_size=2, max_size=4),
        angle=st.floats(min_value=-3.0, max_value=3.0),
    )
    def test_random_strings_match_dense_form(self, letters, angle):
        if set(letters) == {"I"}:
            return
        n = len(letters)
        p = PauliString(letters, 1.0)
        c = Circuit(n_qubits=n)
        c.extend(synthesize_pauli_rotation(p, angle))
        expected = np.cos(angle) * np.eye(2**n) - 1j * np.sin(angle) * pauli_to_matrix(p, n)
        assert np.max(np.abs(circuit_unitary(c) - expected)) < 1e-12


class TestStepSynthesis:
    def test_radiation_step_is_diagonal(self):
        sched = build_schedule(ModeParams(x=2.0, y_i=-2.5, y_f=-0.5, n_steps=4))
        step = sched.steps[-1]
        assert step.ca == 0.0
        circuit = synthesize_step(step)
        assert all(g.name in ("RZ", "CNOT") for g in circuit.gates)
        u = circuit_unitary(circuit)
        off = u - np.diag(np.diag(u))
        assert np.max(np.abs(off)) < 1e-12

    @pytest.mark.parametrize("x,n_steps", [(1.3, 1), (2.0, 5), (3.0, 20)])
    def test_step_unitaries_match_subspace_engine(self, x, n_steps):
        sched = build_schedule(ModeParams(x=x, n_steps=n_steps))
        for step in sched.steps:
            dense = circuit_unitary(synthesize_step(step))
            dist = phase_aligned_distance(restrict(dense), strang_step_unitary(step))
            assert dist < 1e-10

    def test_pair_block_preserves_physical_subspace(self):
        for theta in (0.01, 0.1, 1.0):
            c = Circuit(n_qubits=4)
            for term in aq_pauli_sum():
                c.extend(synthesize_pauli_rotation(term, theta * term.coeff))
            u = circuit_unitary(c)
            outside = np.setdiff1d(np.arange(16), IDX)
            leak = np.max(np.abs(u[np.ix_(outside, IDX)]))
            assert leak < 1e-12


class TestFullCircuit:
    def test_empty_schedule_prepares_vacuum(self):
        circuit = build_full_circuit([])
        assert [g.name for g in circuit.gates] == ["X", "X"]
        probs = probabilities(run_circuit(circuit))
        assert probs == {"0101": 1.0}

    def test_two_step_structure(self):
        sched = build_schedule(ModeParams(x=2.0, n_steps=2))
        circuit = build_full_circuit(sched)
        one_step = synthesize_step(sched.steps[0]).gate_count
        # Preparation plus two equal-shape split-step blocks.
        assert circuit.gate_count == 2 + one_step + synthesize_step(sched.steps[1]).gate_count
        assert one_step == synthesize_step(sched.steps[1]).gate_count

    def test_single_step_gate_count_regression(self):
        # Frozen from the synthesis rules: 2 preparation X gates, two Z
        # half-blocks of 10 gates, and 8 four-qubit rotations of 15..23 gates.
        sched = build_schedule(ModeParams(x=2.0, n_steps=1))
        circuit = build_full_circuit(sched)
        assert circuit.gate_count == 174
        assert circuit.depth() == 92

    @pytest.mark.parametrize("x,n_steps", [(1.3, 1), (2.0, 10), (2.0, 100)])
    def test_full_circuit_matches_matrix_engine(self, x, n_steps):
        sched = build_schedule(ModeParams(x=x, n_steps=n_steps))
        final, _ = evolve(sched)
        probs = probabilities(run_circuit(build_full_circuit(sched)))
        for i, label in enumerate(("0101", "1001", "0110", "1010")):
            assert abs(probs.get(label, 0.0) - abs(final[i]) ** 2) < 1e-10

    def test_single_step_pair_population(self):
        sched = build_schedule(ModeParams(x=1.3, n_steps=1))
        probs = probabilities(run_circuit(build_full_circuit(sched)))
        assert probs["1010"] == pytest.approx(0.0026326481467, abs=1e-9)
