"""Readout-error correction and zero-noise extrapolation.

Readout correction solves the confusion linear system restricted to the
observed bitstrings (never building the full 2^n assignment matrix) and
reports both the raw quasi-probabilities, which may be slightly negative,
and a clipped-renormalized variant; neither choice is hidden.

Extrapolation estimates an observable at several amplified gate-noise levels
and fits a straight line in the amplification factor, weighted by per-point
binomial errors; the reported value is the intercept at factor zero.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Sequence

import numpy as np

from .circuits import Circuit
from .noise import NoiseModel, run_noisy_circuit
from .statevector import CountsTable, observables_from_counts

__all__ = [
    "SingularConfusionError",
    "ReadoutMitigation",
    "mitigate_readout",
    "linear_extrapolate",
    "ZNEResult",
    "zne_counts",
    "zne_estimate",
]

#: Condition number above which the restricted solve is flagged as unreliable.
ILL_CONDITION_THRESHOLD = 1e8

ZNE_OBSERVABLES = ("p_pair", "leakage")


class SingularConfusionError(RuntimeError):
    """Restricted confusion matrix is singular; more shots or fuller support needed."""


@dataclass(frozen=True)
class ReadoutMitigation:
    """Corrected distribution in raw quasi-probability and clipped form."""

    quasi: dict[str, float]
    clipped: dict[str, float]
    condition_number: float
    ill_conditioned: bool


def _restricted_confusion(observed: list[str], model: NoiseModel) -> np.ndarray:
    m = np.empty((len(observed), len(observed)))
    for i, obs in enumerate(observed):
        for j, true in enumerate(observed):
            v = 1.0
            for q, c in enumerate(model.readout):
                v *= c[int(obs[q]), int(true[q])]
            m[i, j] = v
    return m


def mitigate_readout(
    counts: CountsTable | Mapping[str, float], model: NoiseModel
) -> ReadoutMitigation:
    """Invert the readout channel on the subspace of observed bitstrings.

    Accepts a counts table or any bitstring -> weight mapping (weights are
    normalized internally), so exact distributions can be corrected too.  In
    the exact-distribution, fully-supported limit the correction recovers the
    true distribution to solver precision.
    """
    raw = counts.counts if isinstance(counts, CountsTable) else counts
    observed = sorted(s for s, v in raw.items() if v > 0)
    if not observed:
        raise ValueError("no observed bitstrings to mitigate")
    total = float(sum(raw[s] for s in observed))
    freq = np.array([raw[s] / total for s in observed])

    m = _restricted_confusion(observed, model)
    cond = float(np.linalg.cond(m))
    try:
        quasi = np.linalg.solve(m, freq)
    except np.linalg.LinAlgError as exc:
        raise SingularConfusionError(
            "restricted confusion matrix is singular; collect more shots or "
            "a fuller set of observed bitstrings"
        ) from exc

    clipped = np.clip(quasi, 0.0, None)
    clipped_total = clipped.sum()
    if clipped_total > 0:
        clipped = clipped / clipped_total
    return ReadoutMitigation(
        quasi={s: float(v) for s, v in zip(observed, quasi)},
        clipped={s: float(v) for s, v in zip(observed, clipped)},
        condition_number=cond,
        ill_conditioned=cond > ILL_CONDITION_THRESHOLD,
    )


def linear_extrapolate(
    factors: Sequence[float],
    values: Sequence[float],
    stderrs: Sequence[float] | None = None,
) -> tuple[float, float]:
    """Weighted straight-line fit; returns (intercept at 0, intercept stderr).

    With `stderrs` given, points are weighted by 1/stderr (floored to avoid
    infinite weights) and the intercept variance comes from the unscaled
    normal-equation covariance; without them the fit is unweighted and the
    reported stderr is 0 for an exact fit.
    """
    x = np.asarray(factors, dtype=float)
    y = np.asarray(values, dtype=float)
    if x.size != y.size or x.size < 2:
        raise ValueError("need at least two (factor, value) points")
    if stderrs is None:
        coeffs = np.polyfit(x, y, 1)
        return float(np.polyval(coeffs, 0.0)), 0.0
    s = np.asarray(stderrs, dtype=float)
    floor = max(s[s > 0].min() if np.any(s > 0) else 1.0, 1e-300)
    w = 1.0 / np.maximum(s, floor * 1e-6)
    coeffs, cov = np.polyfit(x, y, 1, w=w, cov="unscaled")
    return float(np.polyval(coeffs, 0.0)), float(np.sqrt(cov[1, 1]))


@dataclass(frozen=True)
class ZNEResult:
    """Per-factor estimates and the zero-noise intercept of the linear fit."""

    noise_factors: tuple[float, ...]
    values: tuple[float, ...]
    stderrs: tuple[float, ...]
    extrapolated: float
    extrapolated_stderr: float


def _derived_seed(seed: int, index: int) -> int:
    return int(np.random.SeedSequence([int(seed), int(index)]).generate_state(1)[0])


def _check_factors(factors: Sequence[float]) -> tuple[float, ...]:
    f = tuple(float(v) for v in factors)
    if len(f) < 2:
        raise ValueError("need at least two noise factors")
    if any(v < 1.0 for v in f):
        raise ValueError(f"noise factors must be >= 1, got {f}")
    if any(b <= a for a, b in zip(f, f[1:])):
        raise ValueError(f"noise factors must be strictly increasing, got {f}")
    return f


def zne_counts(
    circuit: Circuit,
    model: NoiseModel,
    factors: Sequence[float],
    shots: int,
    seed: int,
) -> list[CountsTable]:
    """One noisy run per amplification factor, with per-factor derived seeds."""
    f = _check_factors(factors)
    return [
        run_noisy_circuit(circuit, model.scaled(v), shots, _derived_seed(seed, i))
        for i, v in enumerate(f)
    ]


def _observable_value(counts: CountsTable, observable: str) -> tuple[float, float]:
    obs = observables_from_counts(counts)
    v = getattr(obs, observable)
    stderr = float(np.sqrt(max(v * (1.0 - v), 0.0) / counts.shots))
    return float(v), max(stderr, 1.0 / counts.shots)


def zne_estimate(
    circuit: Circuit,
    model: NoiseModel,
    observable: str = "p_pair",
    factors: Sequence[float] = (1.0, 1.5, 2.0),
    shots: int = 4096,
    seed: int = 0,
) -> ZNEResult:
    """Estimate an observable at amplified noise and extrapolate to zero.

    `observable` is "p_pair" or "leakage".  The fit runs on raw (unmitigated)
    counts; per-point weights are binomial shot-noise estimates floored at
    1/shots.
    """
    if observable not in ZNE_OBSERVABLES:
        raise ValueError(f"observable must be one of {ZNE_OBSERVABLES}")
    f = _check_factors(factors)
    tables = zne_counts(circuit, model, f, shots, seed)
    values, stderrs = zip(*(_observable_value(t, observable) for t in tables))
    extrapolated, extrapolated_stderr = linear_extrapolate(f, values, stderrs)
    return ZNEResult(
        noise_factors=f,
        values=tuple(values),
        stderrs=tuple(stderrs),
        extrapolated=extrapolated,
        extrapolated_stderr=extrapolated_stderr,
    )
