"""Synthetic stochastic-Pauli gate noise and per-qubit readout confusion.

The model is deliberately simple: after every gate a uniformly random
non-identity Pauli is injected on the gate's operands with a fixed
probability (p1 per single-qubit gate, p2 per CNOT), and measurement sends
each true bit through a per-qubit 2x2 column-stochastic confusion matrix
C[observed][true].  Default magnitudes follow published backend calibration
medians: readout flip 1.49e-2, two-qubit error 2.80e-3, with p1 = p2/10.

Noise amplification for extrapolation scales the Pauli rates directly
(`scaled`), which in a stochastic-Pauli simulator is the exact semantic
target that hardware gate folding only approximates.

`run_noisy_circuit` draws per-shot trajectories from independent streams
keyed by (seed, shot index), in a fixed documented order, so runs are
reproducible and shots can be parallelized without changing results.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

import numpy as np

from .circuits import Circuit
from .statevector import (
    CountsTable,
    StateVector,
    _apply_gate_inplace,
    probabilities,
    run_circuit,
    sample_counts,
)

__all__ = ["NoiseModel", "apply_readout_noise", "run_noisy_circuit"]

_PAULI_1Q = "XYZ"
# Single-qubit Pauli action on a bit of the state index: (flips_bit, phase(bit)).
_PAULI_ACTION = {
    "X": (True, (1.0, 1.0)),
    "Y": (True, (1j, -1j)),  # Y|0> = i|1>, Y|1> = -i|0>
    "Z": (False, (1.0, -1.0)),
}


def _apply_pauli_inplace(amps: np.ndarray, n: int, q: int, letter: str):
    view = amps.reshape(2**q, 2, -1)
    flips, (ph0, ph1) = _PAULI_ACTION[letter]
    if flips:
        a0 = view[:, 0, :].copy()
        view[:, 0, :] = ph1 * view[:, 1, :]
        view[:, 1, :] = ph0 * a0
    else:
        view[:, 0, :] *= ph0
        view[:, 1, :] *= ph1


@dataclass(frozen=True)
class NoiseModel:
    """Per-qubit readout confusion plus stochastic Pauli gate-error rates."""

    readout: tuple[np.ndarray, ...]
    p1: float
    p2: float

    def __post_init__(self):
        for p in (self.p1, self.p2):
            if not 0.0 <= p <= 1.0:
                raise ValueError(f"Pauli rate {p} outside [0, 1]")
        mats = tuple(np.asarray(c, dtype=float) for c in self.readout)
        object.__setattr__(self, "readout", mats)
        for q, c in enumerate(mats):
            if c.shape != (2, 2):
                raise ValueError(f"readout matrix for qubit {q} is not 2x2")
            if np.any(c < 0.0) or np.any(c > 1.0):
                raise ValueError(f"readout matrix for qubit {q} has entries outside [0, 1]")
            if np.max(np.abs(c.sum(axis=0) - 1.0)) > 1e-12:
                raise ValueError(f"readout matrix for qubit {q} is not column-stochastic")

    @property
    def n_qubits(self) -> int:
        return len(self.readout)

    @property
    def is_gate_noiseless(self) -> bool:
        return self.p1 == 0.0 and self.p2 == 0.0

    @classmethod
    def default(cls, n_qubits: int = 4) -> "NoiseModel":
        return cls.symmetric(n_qubits=n_qubits, epsilon=1.49e-2, p2=2.80e-3)

    @classmethod
    def noiseless(cls, n_qubits: int = 4) -> "NoiseModel":
        return cls.symmetric(n_qubits=n_qubits, epsilon=0.0, p2=0.0, p1=0.0)

    @classmethod
    def symmetric(
        cls,
        n_qubits: int = 4,
        epsilon: float = 1.49e-2,
        p2: float = 2.80e-3,
        p1: float | None = None,
    ) -> "NoiseModel":
        """Uniform symmetric bit-flip readout with rate epsilon on every qubit."""
        c = np.array([[1.0 - epsilon, epsilon], [epsilon, 1.0 - epsilon]])
        return cls(
            readout=tuple(c.copy() for _ in range(n_qubits)),
            p1=p2 / 10.0 if p1 is None else p1,
            p2=p2,
        )

    def scaled(self, factor: float) -> "NoiseModel":
        """Amplify the Pauli rates by `factor`; readout is unchanged."""
        if factor < 0:
            raise ValueError(f"noise factor must be nonnegative, got {factor}")
        return NoiseModel(readout=self.readout, p1=self.p1 * factor, p2=self.p2 * factor)

    def to_json(self) -> str:
        return json.dumps(
            {
                "readout": [c.tolist() for c in self.readout],
                "p1": self.p1,
                "p2": self.p2,
            },
            indent=2,
            sort_keys=True,
        )

    @classmethod
    def from_json(cls, text: str) -> "NoiseModel":
        obj = json.loads(text)
        return cls(
            readout=tuple(np.asarray(c, dtype=float) for c in obj["readout"]),
            p1=float(obj["p1"]),
            p2=float(obj["p2"]),
        )


def apply_readout_noise(
    probs: dict[str, float], model: NoiseModel
) -> dict[str, float]:
    """Push an outcome distribution through the tensor-product confusion.

    Returns the full distribution over all 2^n strings (tiny entries kept),
    normalized to the input total.
    """
    n = model.n_qubits
    if n > 16:
        raise ValueError("dense confusion product limited to 16 qubits")
    p = np.zeros(2**n)
    for s, v in probs.items():
        if len(s) != n:
            raise ValueError(f"bitstring {s!r} does not match {n} qubits")
        p[int(s, 2)] = v
    t = p.reshape((2,) * n)
    for q, c in enumerate(model.readout):
        t = np.moveaxis(np.tensordot(c, t, axes=([1], [q])), 0, q)
    flat = t.reshape(-1)
    return {format(i, f"0{n}b"): float(flat[i]) for i in range(2**n)}


def _shot_rng(seed: int, shot: int) -> np.random.Generator:
    return np.random.Generator(
        np.random.Philox(seed=np.random.SeedSequence([int(seed), int(shot)]))
    )


def _sample_index(rng: np.random.Generator, cumulative: np.ndarray) -> int:
    return int(np.searchsorted(cumulative, rng.random() * cumulative[-1], side="right"))


def _measure_through_readout(
    rng: np.random.Generator, true_index: int, model: NoiseModel
) -> str:
    n = model.n_qubits
    bits = []
    for q in range(n):
        t = (true_index >> (n - 1 - q)) & 1
        bits.append("0" if rng.random() < model.readout[q][0, t] else "1")
    return "".join(bits)


def run_noisy_circuit(
    circuit: Circuit, model: NoiseModel, shots: int, seed: int
) -> CountsTable:
    """Monte-Carlo trajectory sampling of the circuit under the noise model.

    Per shot, an independent stream keyed by (seed, shot index) draws, in
    order: one uniform per gate deciding Pauli injection after that gate, one
    choice per injection (3 single-qubit / 15 two-qubit non-identity Paulis),
    one uniform selecting the measured string, and one uniform per qubit for
    the readout flip.  When both gate rates are zero the trajectory state is
    the ideal one for every shot, so the exact noisy distribution is sampled
    directly through `sample_counts` with the same seed.
    """
    if circuit.n_qubits != model.n_qubits:
        raise ValueError(
            f"model covers {model.n_qubits} qubits, circuit has {circuit.n_qubits}"
        )
    ideal = run_circuit(circuit)
    if model.is_gate_noiseless:
        return sample_counts(
            apply_readout_noise(probabilities(ideal), model), shots, seed
        )

    n = circuit.n_qubits
    gates = circuit.gates
    rates = np.array(
        [model.p2 if g.name == "CNOT" else model.p1 for g in gates]
    )

    # State after each gate prefix of the ideal circuit: replay starts at the
    # first injected gate instead of from scratch.
    prefixes = np.empty((len(gates) + 1, 2**n), dtype=complex)
    state = StateVector.zero(n)
    prefixes[0] = state.amplitudes
    for k, gate in enumerate(gates):
        _apply_gate_inplace(state.amplitudes, n, gate)
        prefixes[k + 1] = state.amplitudes
    ideal_cum = np.cumsum(np.abs(prefixes[-1]) ** 2)

    counts: dict[str, int] = {}
    for shot in range(shots):
        rng = _shot_rng(seed, shot)
        u = rng.random(len(gates))
        injected = np.nonzero(u < rates)[0]
        if injected.size == 0:
            cum = ideal_cum
        else:
            first = int(injected[0])
            amps = prefixes[first + 1].copy()
            inject_set = set(int(g) for g in injected)
            _inject_pauli(rng, amps, n, gates[first])
            for k in range(first + 1, len(gates)):
                _apply_gate_inplace(amps, n, gates[k])
                if k in inject_set:
                    _inject_pauli(rng, amps, n, gates[k])
            cum = np.cumsum(np.abs(amps) ** 2)
        observed = _measure_through_readout(rng, _sample_index(rng, cum), model)
        counts[observed] = counts.get(observed, 0) + 1
    return CountsTable(shots=shots, counts=dict(sorted(counts.items())), seed=int(seed))


def _inject_pauli(rng: np.random.Generator, amps: np.ndarray, n: int, gate) -> None:
    if gate.name == "CNOT":
        pair = int(rng.integers(15)) + 1  # 1..15 over {I,X,Y,Z}^2, skipping II
        a, b = divmod(pair, 4)
        letters = "IXYZ"
        if a:
            _apply_pauli_inplace(amps, n, gate.qubits[0], letters[a])
        if b:
            _apply_pauli_inplace(amps, n, gate.qubits[1], letters[b])
    else:
        letter = _PAULI_1Q[int(rng.integers(3))]
        _apply_pauli_inplace(amps, n, gate.qubits[0], letter)
