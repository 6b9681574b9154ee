"""Uniform conformal-time grid and per-step propagator coefficients.

The evolution window [y_i, y_f] is cut into n_steps equal slices and the
dimensionless generator coefficients are evaluated at each slice midpoint:
cz = 1 - 1/y^2 and ca = -1/y^2 in the de Sitter era, cz = 1 and ca = 0 in
the radiation era.  A slice whose midpoint has crossed y_e = -x counts as
radiation even if the slice itself straddles the transition; the ambiguity
of that single slice shrinks as the grid is refined.

Both evolution engines and the circuit synthesizer consume the same schedule
object, so their rotation angles are byte-identical by construction.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .background import ModeParams

__all__ = ["Branch", "StepCoeffs", "CoeffSchedule", "build_schedule", "strang_angles"]


class Branch(enum.Enum):
    DE_SITTER = "de_sitter"
    RADIATION = "radiation"


@dataclass(frozen=True)
class StepCoeffs:
    """Midpoint, width, and generator coefficients of one time slice."""

    index: int
    y_mid: float
    dy: float
    cz: float
    ca: float
    branch: Branch


@dataclass(frozen=True)
class CoeffSchedule:
    """Immutable ordered slice coefficients for one evolution window."""

    params: ModeParams
    steps: tuple[StepCoeffs, ...]

    def __len__(self) -> int:
        return len(self.steps)

    def __iter__(self):
        return iter(self.steps)

    def boundaries(self) -> list[float]:
        """Slice-boundary times y_0 .. y_N (length n_steps + 1)."""
        p = self.params
        dy = (p.y_f - p.y_i) / p.n_steps
        return [p.y_i + n * dy for n in range(p.n_steps + 1)]


def _coeffs_at(y_mid: float, x: float) -> tuple[float, float, Branch]:
    if y_mid >= -x:
        return 1.0, 0.0, Branch.RADIATION
    ca = -1.0 / y_mid**2
    return 1.0 + ca, ca, Branch.DE_SITTER


def build_schedule(params: ModeParams) -> CoeffSchedule:
    """Evaluate midpoint coefficients on the uniform grid of `params`."""
    if params.n_steps < 1:
        raise ValueError(f"n_steps must be >= 1, got {params.n_steps}")
    dy = (params.y_f - params.y_i) / params.n_steps
    steps = []
    for n in range(params.n_steps):
        y_mid = params.y_i + (n + 0.5) * dy
        cz, ca, branch = _coeffs_at(y_mid, params.x)
        steps.append(
            StepCoeffs(index=n, y_mid=y_mid, dy=dy, cz=cz, ca=ca, branch=branch)
        )
    return CoeffSchedule(params=params, steps=tuple(steps))


def strang_angles(step: StepCoeffs) -> tuple[float, float]:
    """Rotation angles (theta_z_half, theta_a) of the symmetric split step.

    The slice propagator is exp(-i theta_z_half Z) exp(-i theta_a A)
    exp(-i theta_z_half Z) with theta_z_half = cz*dy/2 and theta_a = ca*dy.
    """
    return step.cz * step.dy / 2.0, step.ca * step.dy
