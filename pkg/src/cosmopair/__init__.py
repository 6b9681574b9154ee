"""Time-resolved simulation of pair creation across a sudden cosmological transition.

A mode pair in a de Sitter -> radiation background is evolved by a
second-order split-step product over a uniform conformal-time grid, three
ways: exactly on the four-dimensional physical subspace, as a four-qubit
Pauli-encoded circuit on a statevector simulator, and under synthetic gate
and readout noise with the matching mitigation methods.  The closed-form
sudden-matching pair number 1/(4 x^4) is the benchmark throughout.
"""

from .background import (
    BogoliubovPair,
    ModeParams,
    bogoliubov_analytic,
    bogoliubov_ode_oracle,
    multi_pair_probability,
    n_k_analytic,
    omega_squared,
    scale_factor,
)
from .circuits import Circuit, Gate, circuit_from_text, circuit_to_text
from .encoding import (
    PauliString,
    PauliSum,
    aq_pauli_sum,
    build_full_circuit,
    pauli_to_matrix,
    synthesize_pauli_rotation,
    synthesize_step,
    zq_pauli_sum,
)
from .mitigation import (
    ReadoutMitigation,
    ZNEResult,
    linear_extrapolate,
    mitigate_readout,
    zne_estimate,
)
from .noise import NoiseModel, apply_readout_noise, run_noisy_circuit
from .schedule import Branch, CoeffSchedule, StepCoeffs, build_schedule, strang_angles
from .statevector import (
    CountsTable,
    Observables,
    StateVector,
    apply_gate,
    observables_from_counts,
    probabilities,
    run_circuit,
    sample_counts,
)
from .subspace import (
    A_PHYS,
    PHYS_INDICES,
    PHYS_LABELS,
    Z_PHYS,
    Trajectory,
    evolve,
    particle_number,
    strang_step_unitary,
    vacuum_state,
)

__version__ = "0.1.0"
