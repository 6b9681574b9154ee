"""Four-qubit embedding of the pair generators and per-slice gate synthesis.

Each mode occupies two qubits with the one-hot encoding 01 = empty, 10 =
occupied, so the encoded vacuum is |0101>.  The embedded number operator is
diagonal (identity, single-Z, and ZZ strings); the embedded pair operator is
the rank-two swap |1010><0101| + h.c., whose Pauli expansion is eight
four-letter strings over {X, Y} with coefficients +-1/8.  All eight strings
commute (any two differ in an even number of positions), so the product of
their individual rotations reproduces the pair-generator exponential exactly
and each time slice maps to one fixed gate block with step-dependent angles.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .circuits import Circuit, Gate
from .schedule import StepCoeffs, strang_angles

__all__ = [
    "PauliString",
    "PauliSum",
    "zq_pauli_sum",
    "aq_pauli_sum",
    "pauli_to_matrix",
    "synthesize_pauli_rotation",
    "synthesize_step",
    "build_full_circuit",
    "phase_aligned_distance",
]

_PAULI_MATS = {
    "I": np.eye(2, dtype=complex),
    "X": np.array([[0, 1], [1, 0]], dtype=complex),
    "Y": np.array([[0, -1j], [1j, 0]], dtype=complex),
    "Z": np.array([[1, 0], [0, -1]], dtype=complex),
}


@dataclass(frozen=True)
class PauliString:
    """Real coefficient times a tensor product of I/X/Y/Z letters.

    Position in `letters` is the qubit index; qubit 0 is the leftmost tensor
    factor (most significant bit of the state index).
    """

    letters: str
    coeff: float

    def __post_init__(self):
        if not self.letters or any(c not in _PAULI_MATS for c in self.letters):
            raise ValueError(f"invalid Pauli letters {self.letters!r}")

    @property
    def is_identity(self) -> bool:
        return set(self.letters) == {"I"}

    def active_qubits(self) -> list[int]:
        return [q for q, c in enumerate(self.letters) if c != "I"]


@dataclass(frozen=True)
class PauliSum:
    terms: tuple[PauliString, ...]

    def __iter__(self):
        return iter(self.terms)

    def __len__(self):
        return len(self.terms)


def zq_pauli_sum() -> PauliSum:
    """Embedded number operator: 7 diagonal terms including the identity."""
    return PauliSum(
        terms=(
            PauliString("IIII", 0.5),
            PauliString("ZIII", -0.25),
            PauliString("IZII", 0.25),
            PauliString("IIZI", -0.25),
            PauliString("IIIZ", 0.25),
            PauliString("ZZII", -0.25),
            PauliString("IIZZ", -0.25),
        )
    )


def aq_pauli_sum() -> PauliSum:
    """Embedded pair operator: 8 mutually commuting XY strings, +-1/8 each."""
    return PauliSum(
        terms=(
            PauliString("XXXX", 0.125),
            PauliString("XXYY", 0.125),
            PauliString("XYXY", -0.125),
            PauliString("XYYX", 0.125),
            PauliString("YXXY", 0.125),
            PauliString("YXYX", -0.125),
            PauliString("YYXX", 0.125),
            PauliString("YYYY", 0.125),
        )
    )


def pauli_to_matrix(p: PauliSum | PauliString, n_qubits: int) -> np.ndarray:
    """Dense Kronecker expansion, for verification at small register sizes."""
    if n_qubits > 12:
        raise ValueError(f"dense expansion limited to 12 qubits, got {n_qubits}")
    terms = p.terms if isinstance(p, PauliSum) else (p,)
    out = np.zeros((2**n_qubits, 2**n_qubits), dtype=complex)
    for term in terms:
        if len(term.letters) != n_qubits:
            raise ValueError(
                f"term {term.letters!r} does not act on {n_qubits} qubits"
            )
        m = np.array([[term.coeff]], dtype=complex)
        for letter in term.letters:
            m = np.kron(m, _PAULI_MATS[letter])
        out += m
    return out


# Basis changes taking each letter to Z, as (before, after) gate name lists.
_BASIS_CHANGE = {
    "X": (("H",), ("H",)),
    "Y": (("SDG", "H"), ("H", "S")),
    "Z": ((), ()),
}


def synthesize_pauli_rotation(p: PauliString, angle: float) -> list[Gate]:
    """Gate fragment implementing exp(-i * angle * P) for one Pauli string.

    Basis changes rotate every letter to Z, a CNOT ladder accumulates parity
    on the highest-index active qubit, RZ(2*angle) applies the phase there,
    and the mirror unwinds.  The string's own coefficient is not consulted;
    fold it into `angle`.
    """
    active = p.active_qubits()
    if not active:
        raise ValueError("cannot synthesize a rotation of the identity string")

    before: list[Gate] = []
    after_blocks: list[list[Gate]] = []
    for q in active:
        pre, post = _BASIS_CHANGE[p.letters[q]]
        before.extend(Gate(name, (q,)) for name in pre)
        after_blocks.append([Gate(name, (q,)) for name in post])
    # Mirror unwinding reverses the qubit order but not the per-qubit gates.
    after = [g for block in reversed(after_blocks) for g in block]

    ladder = [
        Gate("CNOT", (active[i], active[i + 1])) for i in range(len(active) - 1)
    ]
    target = active[-1]
    return (
        before
        + ladder
        + [Gate("RZ", (target,), angle=2.0 * angle)]
        + ladder[::-1]
        + after
    )


def _z_half_block(theta_zh: float) -> list[Gate]:
    gates: list[Gate] = []
    for term in zq_pauli_sum():
        if term.is_identity:
            continue  # global phase only
        gates.extend(synthesize_pauli_rotation(term, theta_zh * term.coeff))
    return gates


def synthesize_step(step: StepCoeffs) -> Circuit:
    """One symmetric split slice: Z half-block, pair block, Z half-block.

    The pair block is the exact product of the eight commuting string
    rotations.  Radiation-era slices (ca = 0) emit no four-qubit rotations at
    all, leaving a purely diagonal circuit.
    """
    theta_zh, theta_a = strang_angles(step)
    circuit = Circuit(n_qubits=4)
    circuit.extend(_z_half_block(theta_zh))
    if theta_a != 0.0:
        for term in aq_pauli_sum():
            circuit.extend(synthesize_pauli_rotation(term, theta_a * term.coeff))
    circuit.extend(_z_half_block(theta_zh))
    return circuit


def build_full_circuit(schedule) -> Circuit:
    """Vacuum preparation followed by one synthesized block per slice.

    Accepts a CoeffSchedule or any iterable of StepCoeffs (possibly empty,
    which yields the preparation-only circuit).
    """
    steps = getattr(schedule, "steps", schedule)
    circuit = Circuit(n_qubits=4)
    circuit.add("X", 1)
    circuit.add("X", 3)
    for step in steps:
        circuit.extend(synthesize_step(step).gates)
    return circuit


def phase_aligned_distance(a: np.ndarray, b: np.ndarray) -> float:
    """Max-entry distance between matrices after removing a global phase."""
    a = np.asarray(a)
    b = np.asarray(b)
    ij = np.unravel_index(np.argmax(np.abs(b)), b.shape)
    ref = b[ij]
    if abs(ref) < 1e-300:
        return float(np.max(np.abs(a - b)))
    phase = a[ij] / ref
    if abs(phase) < 1e-300:
        return float(np.max(np.abs(a - b)))
    phase /= abs(phase)
    return float(np.max(np.abs(a - phase * b)))
