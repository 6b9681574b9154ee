"""Gate records, circuits over a small fixed gate set, and text serialization.

Gate set: X, H, S, Sdg, RZ(theta), RX(theta), CNOT.  Qubit 0 is the leftmost
position of a measurement bitstring (most significant bit of the state
index).  The text format is one gate per line, `NAME q[,q2][,angle]`, angles
in radians with 17 significant digits so files round-trip bit-exactly.
"""

from __future__ import annotations

from dataclasses import dataclass, field

__all__ = ["GATE_NAMES", "Gate", "Circuit", "circuit_to_text", "circuit_from_text"]

#: name -> (number of qubits, takes an angle)
GATE_NAMES = {
    "X": (1, False),
    "H": (1, False),
    "S": (1, False),
    "SDG": (1, False),
    "RZ": (1, True),
    "RX": (1, True),
    "CNOT": (2, False),
}


@dataclass(frozen=True)
class Gate:
    name: str
    qubits: tuple[int, ...]
    angle: float | None = None

    def __post_init__(self):
        if self.name not in GATE_NAMES:
            raise ValueError(f"unknown gate {self.name!r}")
        n_q, takes_angle = GATE_NAMES[self.name]
        if len(self.qubits) != n_q:
            raise ValueError(f"{self.name} takes {n_q} qubit(s), got {self.qubits}")
        if takes_angle != (self.angle is not None):
            raise ValueError(f"{self.name}: angle mismatch (angle={self.angle})")
        if len(set(self.qubits)) != len(self.qubits):
            raise ValueError(f"{self.name}: repeated qubit in {self.qubits}")


@dataclass
class Circuit:
    """Ordered gate list on a fixed register; indices are validated on add."""

    n_qubits: int
    gates: list[Gate] = field(default_factory=list)

    def __post_init__(self):
        if not 1 <= self.n_qubits <= 20:
            raise ValueError(f"n_qubits must be in [1, 20], got {self.n_qubits}")
        for g in self.gates:
            self._check(g)

    def _check(self, gate: Gate):
        for q in gate.qubits:
            if not 0 <= q < self.n_qubits:
                raise ValueError(
                    f"qubit {q} out of range for {self.n_qubits}-qubit circuit"
                )

    def add(self, name: str, *qubits: int, angle: float | None = None) -> "Circuit":
        gate = Gate(name=name, qubits=tuple(qubits), angle=angle)
        self._check(gate)
        self.gates.append(gate)
        return self

    def extend(self, gates) -> "Circuit":
        for g in gates:
            self._check(g)
            self.gates.append(g)
        return self

    @property
    def gate_count(self) -> int:
        return len(self.gates)

    def depth(self) -> int:
        """Greedy layering depth: gates on disjoint qubits share a layer."""
        frontier = [0] * self.n_qubits
        for g in self.gates:
            layer = 1 + max(frontier[q] for q in g.qubits)
            for q in g.qubits:
                frontier[q] = layer
        return max(frontier, default=0)


def circuit_to_text(circuit: Circuit) -> str:
    """Serialize one gate per line; header line carries the register size."""
    lines = [f"QUBITS {circuit.n_qubits}"]
    for g in circuit.gates:
        parts = [str(q) for q in g.qubits]
        if g.angle is not None:
            parts.append(f"{g.angle:.17g}")
        lines.append(f"{g.name} {','.join(parts)}")
    return "\n".join(lines) + "\n"


def circuit_from_text(text: str) -> Circuit:
    lines = [
        ln.strip()
        for ln in text.splitlines()
        if ln.strip() and not ln.lstrip().startswith("#")
    ]
    if not lines or not lines[0].startswith("QUBITS "):
        raise ValueError("circuit text must start with a 'QUBITS n' line")
    circuit = Circuit(n_qubits=int(lines[0].split()[1]))
    for ln in lines[1:]:
        name, _, rest = ln.partition(" ")
        fields = rest.split(",")
        n_q, takes_angle = GATE_NAMES.get(name, (None, None))
        if n_q is None:
            raise ValueError(f"unknown gate line {ln!r}")
        qubits = [int(f) for f in fields[:n_q]]
        angle = float(fields[n_q]) if takes_angle else None
        circuit.add(name, *qubits, angle=angle)
    return circuit
