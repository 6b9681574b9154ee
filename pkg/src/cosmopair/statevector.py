"""Small-register statevector simulator with seeded shot sampling.

Amplitude layout: qubit j is bit j counted from the left of the bitstring,
i.e. the most significant bit of the flat index, so printed bitstrings read
exactly like ket labels.  Registers up to 20 qubits are supported; the dense
unitary builder is restricted to 12.

Shot sampling draws one multinomial per request from a Philox counter-based
generator seeded through numpy's SeedSequence, so identical (probs, shots,
seed) give identical counts on every platform.  Probabilities below 1e-15
are clamped to zero before sampling.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping

import numpy as np

from .circuits import Circuit, Gate

__all__ = [
    "StateVector",
    "CountsTable",
    "Observables",
    "PHYSICAL_LABELS",
    "apply_gate",
    "run_circuit",
    "probabilities",
    "sample_counts",
    "observables_from_counts",
    "observables_from_probabilities",
    "counts_to_csv",
    "observables_record",
    "circuit_unitary",
    "counts_rng",
]

#: Basis labels of the encoded two-mode states (vacuum, +k, -k, pair).
PHYSICAL_LABELS = ("0101", "1001", "0110", "1010")

_INV_SQRT2 = 1.0 / np.sqrt(2.0)


@dataclass
class StateVector:
    n_qubits: int
    amplitudes: np.ndarray

    @classmethod
    def zero(cls, n_qubits: int) -> "StateVector":
        if not 1 <= n_qubits <= 20:
            raise ValueError(f"n_qubits must be in [1, 20], got {n_qubits}")
        amps = np.zeros(2**n_qubits, dtype=complex)
        amps[0] = 1.0
        return cls(n_qubits=n_qubits, amplitudes=amps)

    @property
    def norm(self) -> float:
        return float(np.linalg.norm(self.amplitudes))


def _mat_1q(gate: Gate) -> np.ndarray:
    if gate.name == "X":
        return np.array([[0, 1], [1, 0]], dtype=complex)
    if gate.name == "H":
        return np.array([[1, 1], [1, -1]], dtype=complex) * _INV_SQRT2
    if gate.name == "S":
        return np.diag([1.0, 1j])
    if gate.name == "SDG":
        return np.diag([1.0, -1j])
    if gate.name == "RZ":
        return np.diag([np.exp(-0.5j * gate.angle), np.exp(0.5j * gate.angle)])
    if gate.name == "RX":
        c, s = np.cos(gate.angle / 2.0), np.sin(gate.angle / 2.0)
        return np.array([[c, -1j * s], [-1j * s, c]])
    raise ValueError(f"not a single-qubit gate: {gate.name}")


def _apply_1q_inplace(amps: np.ndarray, n: int, q: int, mat: np.ndarray):
    view = amps.reshape(2**q, 2, -1)
    a0 = view[:, 0, :].copy()
    a1 = view[:, 1, :]
    view[:, 0, :] = mat[0, 0] * a0 + mat[0, 1] * a1
    view[:, 1, :] = mat[1, 0] * a0 + mat[1, 1] * a1


def _apply_cnot_inplace(amps: np.ndarray, n: int, control: int, target: int):
    view = amps.reshape((2,) * n)
    sel: list = [slice(None)] * n
    sel[control] = 1
    i0, i1 = sel.copy(), sel.copy()
    i0[target] = 0
    i1[target] = 1
    tmp = view[tuple(i0)].copy()
    view[tuple(i0)] = view[tuple(i1)]
    view[tuple(i1)] = tmp


def _apply_gate_inplace(amps: np.ndarray, n: int, gate: Gate):
    if gate.name == "CNOT":
        _apply_cnot_inplace(amps, n, *gate.qubits)
    else:
        _apply_1q_inplace(amps, n, gate.qubits[0], _mat_1q(gate))


def apply_gate(state: StateVector, gate: Gate) -> StateVector:
    """Return a new state with one gate applied."""
    for q in gate.qubits:
        if not 0 <= q < state.n_qubits:
            raise ValueError(f"qubit {q} out of range for {state.n_qubits} qubits")
    amps = state.amplitudes.copy()
    _apply_gate_inplace(amps, state.n_qubits, gate)
    return StateVector(n_qubits=state.n_qubits, amplitudes=amps)


def run_circuit(circuit: Circuit) -> StateVector:
    """Apply every gate in order starting from |0...0>."""
    state = StateVector.zero(circuit.n_qubits)
    amps = state.amplitudes
    for gate in circuit.gates:
        _apply_gate_inplace(amps, circuit.n_qubits, gate)
    return state


def circuit_unitary(circuit: Circuit) -> np.ndarray:
    """Dense unitary of a circuit; verification tool, limited to 12 qubits."""
    n = circuit.n_qubits
    if n > 12:
        raise ValueError(f"dense unitary limited to 12 qubits, got {n}")
    # Rows are contiguous, so evolve basis states as rows and transpose.
    rows = np.eye(2**n, dtype=complex)
    for r in range(2**n):
        for gate in circuit.gates:
            _apply_gate_inplace(rows[r], n, gate)
    return rows.T.copy()


def probabilities(state: StateVector) -> dict[str, float]:
    """|amplitude|^2 keyed by bitstring; entries below 1e-15 are dropped."""
    p = np.abs(state.amplitudes) ** 2
    total = p.sum()
    if abs(total - 1.0) > 1e-10:
        raise ValueError(f"state is not normalized (sum of probs = {total})")
    n = state.n_qubits
    return {
        format(i, f"0{n}b"): float(p[i]) for i in np.nonzero(p >= 1e-15)[0]
    }


def counts_rng(seed: int) -> np.random.Generator:
    """The package-wide sampling generator: Philox keyed via SeedSequence."""
    return np.random.Generator(np.random.Philox(seed=np.random.SeedSequence(int(seed))))


@dataclass(frozen=True)
class CountsTable:
    """Measurement outcomes of a finite-shot run; zero-count strings omitted."""

    shots: int
    counts: dict[str, int]
    seed: int

    def frequency(self, bitstring: str) -> float:
        return self.counts.get(bitstring, 0) / self.shots


def sample_counts(probs: Mapping[str, float], shots: int, seed: int) -> CountsTable:
    """One multinomial draw over the outcome distribution.

    Keys are processed in lexicographic order, so dict ordering never affects
    the draw.  Negative entries below -1e-12 are rejected; tiny negatives are
    clamped to zero and the distribution renormalized.
    """
    if shots < 1:
        raise ValueError(f"shots must be >= 1, got {shots}")
    keys = sorted(probs)
    p = np.array([probs[k] for k in keys], dtype=float)
    if np.any(p < -1e-12):
        raise ValueError(f"negative probability: min = {p.min()}")
    p = np.clip(p, 0.0, None)
    p[p < 1e-15] = 0.0
    total = p.sum()
    if abs(total - 1.0) > 1e-9:
        raise ValueError(f"probabilities sum to {total}, expected 1")
    p /= total
    draws = counts_rng(seed).multinomial(shots, p)
    counts = {k: int(c) for k, c in zip(keys, draws) if c > 0}
    return CountsTable(shots=shots, counts=counts, seed=int(seed))


@dataclass(frozen=True)
class Observables:
    """Mode occupations, pair probability, and subspace leakage."""

    n_plus: float
    n_minus: float
    p_pair: float
    leakage: float
    stderr_pair: float


def observables_from_counts(counts: CountsTable) -> Observables:
    """Occupations from measured frequencies of the four physical strings."""
    p = {s: counts.frequency(s) for s in PHYSICAL_LABELS}
    p_pair = p["1010"]
    return Observables(
        n_plus=p["1001"] + p["1010"],
        n_minus=p["0110"] + p["1010"],
        p_pair=p_pair,
        leakage=1.0 - sum(p.values()),
        stderr_pair=float(np.sqrt(p_pair * (1.0 - p_pair) / counts.shots)),
    )


def observables_from_probabilities(probs: Mapping[str, float]) -> Observables:
    """Exact-distribution variant of `observables_from_counts` (stderr 0)."""
    p = {s: float(probs.get(s, 0.0)) for s in PHYSICAL_LABELS}
    return Observables(
        n_plus=p["1001"] + p["1010"],
        n_minus=p["0110"] + p["1010"],
        p_pair=p["1010"],
        leakage=1.0 - sum(p.values()),
        stderr_pair=0.0,
    )


def counts_to_csv(table: CountsTable) -> str:
    """`bitstring,count` lines sorted lexicographically by bitstring."""
    lines = ["bitstring,count"]
    lines.extend(f"{s},{table.counts[s]}" for s in sorted(table.counts))
    return "\n".join(lines) + "\n"


def observables_record(
    obs: Observables, *, x: float, n_steps: int, shots: int | None, seed: int | None
) -> dict:
    """Flat JSON-ready record of one observables extraction."""
    return {
        "x": x,
        "n_steps": n_steps,
        "shots": shots,
        "seed": seed,
        "n_plus": obs.n_plus,
        "n_minus": obs.n_minus,
        "p_pair": obs.p_pair,
        "leakage": obs.leakage,
        "stderr_pair": obs.stderr_pair,
    }
