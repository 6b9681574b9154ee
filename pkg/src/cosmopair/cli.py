"""Reproduction driver: one subcommand per headline result.

Subcommands and their outputs (all plot-ready CSV/JSON, no rendering):

    sweep          pair number vs x for a chosen set of methods
                   -> sweep.csv + sweep.json
    trajectory     time-resolved pair occupation for each x
                   -> trajectory_x<X>.csv
    noise-study    raw / readout-mitigated / extrapolated estimates with
                   leakage under a synthetic noise model -> noise_study.json
    dump-schedule  per-slice coefficients -> schedule_x<X>_n<N>.json
    dump-circuit   synthesized gate list -> circuit_x<X>_n<N>.txt
    verify         built-in check suite; exit 0 iff all pass

Every file starts with a metadata header (tool version, parameters, seed)
sufficient to regenerate it bit-exactly, and files are written atomically.
Exit codes: 0 success, 1 verification failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ThreadPoolExecutor
from pathlib import Path

import numpy as np

from . import __version__
from .background import ModeParams, multi_pair_probability, n_k_analytic
from .circuits import circuit_to_text
from .encoding import build_full_circuit
from .mitigation import mitigate_readout, linear_extrapolate, zne_counts
from .noise import NoiseModel, run_noisy_circuit
from .schedule import build_schedule
from .selfcheck import format_report, run_checks
from .statevector import (
    counts_to_csv,
    observables_from_counts,
    observables_from_probabilities,
    observables_record,
    probabilities,
    run_circuit,
    sample_counts,
)
from .subspace import evolve, particle_number

SCHEMA_VERSION = 1

METHODS = ("analytic", "matrix", "statevector", "shots", "noisy", "mitigated", "zne")

#: Step-count defaults per method when --n-steps is not given.
DEFAULT_N_STEPS = {
    "matrix": 2500,
    "statevector": 1000,
    "shots": 500,
    "noisy": 1,
    "mitigated": 1,
    "zne": 1,
}

#: Shot defaults per sampling method when --shots is not given.
DEFAULT_SHOTS = {"shots": 8192, "noisy": 4096, "mitigated": 4096, "zne": 4096}

SWEEP_COLUMNS = (
    "x",
    "n_steps",
    "method",
    "shots",
    "seed",
    "n_k",
    "stderr",
    "leakage",
    "multi_pair_bound",
)

TRAJECTORY_COLUMNS = ("y", "p_vac", "p_plus", "p_minus", "p_pair", "n_k_analytic")


class UsageError(Exception):
    pass


def _write_atomic(path: Path, text: str):
    path.parent.mkdir(parents=True, exist_ok=True)
    tmp = path.with_name(path.name + ".tmp")
    tmp.write_text(text)
    os.replace(tmp, path)


def _metadata_lines(command: str, parameters: dict) -> list[str]:
    return [
        f"# cosmopair {__version__}",
        f"# command: {command}",
        f"# parameters: {json.dumps(parameters, sort_keys=True)}",
    ]


def _json_envelope(command: str, parameters: dict, **payload) -> str:
    doc = {
        "schema_version": SCHEMA_VERSION,
        "tool": "cosmopair",
        "version": __version__,
        "command": command,
        "parameters": parameters,
        **payload,
    }
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"


def _fmt(value) -> str:
    if value is None:
        return ""
    if isinstance(value, float):
        return repr(value)
    return str(value)


def _derived_seed(*entropy: int) -> int:
    return int(np.random.SeedSequence(list(entropy)).generate_state(1)[0])


def _parse_x_grid(args) -> list[float]:
    if args.x is not None:
        xs = [float(v) for v in args.x.split(",") if v]
    else:
        xs = [float(v) for v in np.geomspace(args.x_min, args.x_max, args.x_points)]
    if not xs or any(x <= 0 for x in xs):
        raise UsageError(f"x grid must be nonempty and positive, got {xs}")
    return xs


def _parse_factors(text: str) -> tuple[float, ...]:
    return tuple(float(v) for v in text.split(",") if v)


def _load_model(path: str | None, n_qubits: int = 4) -> NoiseModel:
    if path is None:
        return NoiseModel.default(n_qubits)
    file = Path(path)
    if not file.exists():
        raise UsageError(f"noise model file not found: {file}")
    return NoiseModel.from_json(file.read_text())


def _mode_params(x: float, args, n_steps: int) -> ModeParams:
    return ModeParams(
        x=x,
        y_i=args.y_i,
        y_f=args.y_f if args.y_f is not None else -x + 2.0,
        n_steps=n_steps,
    )


# ---------------------------------------------------------------------------
# sweep
# ---------------------------------------------------------------------------

def _sweep_point(x: float, method: str, args, model: NoiseModel, row_seed: int) -> dict:
    n_k_an = n_k_analytic(x)
    row = {
        "x": x,
        "n_steps": 0,
        "method": method,
        "shots": None,
        "seed": None,
        "n_k": None,
        "stderr": None,
        "leakage": None,
        "multi_pair_bound": multi_pair_probability(n_k_an),
    }
    if method == "analytic":
        row["n_k"] = n_k_an
        return row

    n_steps = args.n_steps if args.n_steps is not None else DEFAULT_N_STEPS[method]
    row["n_steps"] = n_steps
    schedule = build_schedule(_mode_params(x, args, n_steps))

    if method == "matrix":
        final, _ = evolve(schedule)
        row["n_k"] = particle_number(final)[2]
        row["leakage"] = 0.0
        return row

    circuit = build_full_circuit(schedule)
    if method == "statevector":
        obs = observables_from_probabilities(probabilities(run_circuit(circuit)))
        row["n_k"] = obs.p_pair
        row["leakage"] = obs.leakage
        return row

    shots = args.shots if args.shots is not None else DEFAULT_SHOTS[method]
    row["shots"] = shots
    row["seed"] = row_seed
    if method == "shots":
        counts = sample_counts(probabilities(run_circuit(circuit)), shots, row_seed)
        obs = observables_from_counts(counts)
        row.update(n_k=obs.p_pair, stderr=obs.stderr_pair, leakage=obs.leakage)
        return row
    if method == "noisy":
        obs = observables_from_counts(run_noisy_circuit(circuit, model, shots, row_seed))
        row.update(n_k=obs.p_pair, stderr=obs.stderr_pair, leakage=obs.leakage)
        return row
    if method == "mitigated":
        counts = run_noisy_circuit(circuit, model, shots, row_seed)
        fixed = mitigate_readout(counts, model)
        obs = observables_from_probabilities(fixed.clipped)
        raw_obs = observables_from_counts(counts)
        row.update(n_k=obs.p_pair, stderr=raw_obs.stderr_pair, leakage=obs.leakage)
        return row
    if method == "zne":
        factors = _parse_factors(args.factors)
        values = _zne_both(circuit, model, factors, shots, row_seed)
        row.update(
            n_k=values["p_pair"][0], stderr=values["p_pair"][1],
            leakage=values["leakage"][0],
        )
        return row
    raise UsageError(f"unknown method {method!r}")


def _zne_both(circuit, model, factors, shots, seed) -> dict:
    """Extrapolate p_pair and leakage from one shared set of per-factor runs."""
    tables = zne_counts(circuit, model, factors, shots, seed)
    out = {}
    for name in ("p_pair", "leakage"):
        vals, errs = [], []
        for t in tables:
            v = getattr(observables_from_counts(t), name)
            vals.append(float(v))
            errs.append(max(float(np.sqrt(max(v * (1 - v), 0.0) / t.shots)), 1.0 / t.shots))
        out[name] = (*linear_extrapolate(factors, vals, errs), tuple(vals), tuple(errs))
    return out


def cmd_sweep(args) -> int:
    x_grid = _parse_x_grid(args)
    methods = [m for m in args.methods.split(",") if m]
    for m in methods:
        if m not in METHODS:
            raise UsageError(f"unknown method {m!r}; choose from {METHODS}")
    model = _load_model(args.model_file)

    tasks = []
    for xi, x in enumerate(sorted(x_grid)):
        for method in methods:
            row_seed = _derived_seed(args.seed, xi, METHODS.index(method))
            tasks.append((x, method, row_seed))
    with ThreadPoolExecutor(max_workers=args.workers) as pool:
        rows = list(
            pool.map(lambda t: _sweep_point(t[0], t[1], args, model, t[2]), tasks)
        )
    rows.sort(key=lambda r: (r["x"], METHODS.index(r["method"])))

    parameters = {
        "x_grid": sorted(x_grid),
        "methods": methods,
        "n_steps": args.n_steps,
        "shots": args.shots,
        "seed": args.seed,
        "factors": args.factors,
        "model_file": args.model_file,
        "y_i": args.y_i,
        "y_f": args.y_f,
    }
    out_dir = Path(args.out_dir)
    lines = _metadata_lines("sweep", parameters)
    lines.append(",".join(SWEEP_COLUMNS))
    lines.extend(",".join(_fmt(r[c]) for c in SWEEP_COLUMNS) for r in rows)
    _write_atomic(out_dir / "sweep.csv", "\n".join(lines) + "\n")
    _write_atomic(
        out_dir / "sweep.json", _json_envelope("sweep", parameters, rows=rows)
    )
    print(f"wrote {out_dir / 'sweep.csv'}")
    print(f"wrote {out_dir / 'sweep.json'}")
    return 0


# ---------------------------------------------------------------------------
# trajectory
# ---------------------------------------------------------------------------

def cmd_trajectory(args) -> int:
    x_grid = _parse_x_grid(args)
    n_steps = args.n_steps if args.n_steps is not None else 2500
    out_dir = Path(args.out_dir)
    for x in sorted(x_grid):
        n_k_an = n_k_analytic(x)
        if n_steps == 0:
            rows = [(args.y_i, 1.0, 0.0, 0.0, 0.0)]
        else:
            _, traj = evolve(build_schedule(_mode_params(x, args, n_steps)))
            rows = traj.rows()
        parameters = {
            "x": x,
            "n_steps": n_steps,
            "y_i": args.y_i,
            "y_f": args.y_f if args.y_f is not None else -x + 2.0,
        }
        lines = _metadata_lines("trajectory", parameters)
        lines.append(",".join(TRAJECTORY_COLUMNS))
        lines.extend(
            ",".join(_fmt(v) for v in (*r, n_k_an)) for r in rows
        )
        path = out_dir / f"trajectory_x{x:g}.csv"
        _write_atomic(path, "\n".join(lines) + "\n")
        print(f"wrote {path}")
    return 0


# ---------------------------------------------------------------------------
# noise-study
# ---------------------------------------------------------------------------

def cmd_noise_study(args) -> int:
    x_grid = _parse_x_grid(args)
    n_steps = args.n_steps if args.n_steps is not None else 1
    shots = args.shots if args.shots is not None else 4096
    factors = _parse_factors(args.factors)
    model = _load_model(args.model_file)

    out_dir = Path(args.out_dir)
    results = []
    counts_files = []
    for xi, x in enumerate(sorted(x_grid)):
        schedule = build_schedule(_mode_params(x, args, n_steps))
        circuit = build_full_circuit(schedule)
        ideal = observables_from_probabilities(probabilities(run_circuit(circuit)))

        seed = _derived_seed(args.seed, xi)
        counts = run_noisy_circuit(circuit, model, shots, seed)
        raw = observables_from_counts(counts)
        fixed = mitigate_readout(counts, model)
        mitigated = observables_from_probabilities(fixed.clipped)
        quasi = observables_from_probabilities(fixed.quasi)
        zne = _zne_both(circuit, model, factors, shots, seed)

        counts_meta = {"x": x, "n_steps": n_steps, "shots": shots, "seed": seed}
        counts_text = "\n".join(_metadata_lines("noise-study", counts_meta)) + "\n"
        counts_files.append((out_dir / f"counts_x{x:g}.csv", counts_text + counts_to_csv(counts)))

        n_k_an = n_k_analytic(x)
        record = observables_record(raw, x=x, n_steps=n_steps, shots=shots, seed=seed)
        results.append(
            {
                "x": x,
                "n_steps": n_steps,
                "shots": shots,
                "seed": seed,
                "analytic_n_k": n_k_an,
                "multi_pair_bound": multi_pair_probability(n_k_an),
                "ideal": {"p_pair": ideal.p_pair, "leakage": ideal.leakage},
                "raw": {"n_k": raw.p_pair, "stderr": raw.stderr_pair, **record},
                "mitigated": {
                    "n_k": mitigated.p_pair,
                    "n_k_quasi": quasi.p_pair,
                    "leakage": mitigated.leakage,
                    "leakage_quasi": quasi.leakage,
                    "condition_number": fixed.condition_number,
                    "ill_conditioned": fixed.ill_conditioned,
                },
                "zne": {
                    "n_k": zne["p_pair"][0],
                    "stderr": zne["p_pair"][1],
                    "leakage": zne["leakage"][0],
                    "leakage_stderr": zne["leakage"][1],
                    "factors": list(factors),
                    "p_pair_values": list(zne["p_pair"][2]),
                    "p_pair_stderrs": list(zne["p_pair"][3]),
                    "leakage_values": list(zne["leakage"][2]),
                },
            }
        )

    parameters = {
        "x_grid": sorted(x_grid),
        "n_steps": n_steps,
        "shots": shots,
        "seed": args.seed,
        "factors": list(factors),
        "model_file": args.model_file,
        "model": json.loads(model.to_json()),
        "y_i": args.y_i,
        "y_f": args.y_f,
    }
    path = out_dir / "noise_study.json"
    _write_atomic(path, _json_envelope("noise-study", parameters, results=results))
    print(f"wrote {path}")
    for counts_path, text in counts_files:
        _write_atomic(counts_path, text)
        print(f"wrote {counts_path}")
    return 0


# ---------------------------------------------------------------------------
# dumps and verify
# ---------------------------------------------------------------------------

def cmd_dump_schedule(args) -> int:
    x_grid = _parse_x_grid(args)
    n_steps = args.n_steps if args.n_steps is not None else 1
    out_dir = Path(args.out_dir)
    for x in sorted(x_grid):
        schedule = build_schedule(_mode_params(x, args, n_steps))
        steps = [
            {
                "index": s.index,
                "y_mid": s.y_mid,
                "dy": s.dy,
                "cz": s.cz,
                "ca": s.ca,
                "branch": s.branch.value,
            }
            for s in schedule
        ]
        parameters = {
            "x": x,
            "n_steps": n_steps,
            "y_i": args.y_i,
            "y_f": args.y_f if args.y_f is not None else -x + 2.0,
        }
        path = out_dir / f"schedule_x{x:g}_n{n_steps}.json"
        _write_atomic(path, _json_envelope("dump-schedule", parameters, steps=steps))
        print(f"wrote {path}")
    return 0


def cmd_dump_circuit(args) -> int:
    x_grid = _parse_x_grid(args)
    n_steps = args.n_steps if args.n_steps is not None else 1
    out_dir = Path(args.out_dir)
    for x in sorted(x_grid):
        if n_steps == 0:
            circuit = build_full_circuit([])
        else:
            circuit = build_full_circuit(build_schedule(_mode_params(x, args, n_steps)))
        parameters = {
            "x": x,
            "n_steps": n_steps,
            "y_i": args.y_i,
            "y_f": args.y_f if args.y_f is not None else -x + 2.0,
            "gate_count": circuit.gate_count,
            "depth": circuit.depth(),
        }
        text = "\n".join(_metadata_lines("dump-circuit", parameters)) + "\n"
        text += circuit_to_text(circuit)
        path = out_dir / f"circuit_x{x:g}_n{n_steps}.txt"
        _write_atomic(path, text)
        print(f"wrote {path}")
    return 0


def cmd_verify(_args) -> int:
    results = run_checks()
    sys.stdout.write(format_report(results))
    return 0 if all(r.passed for r in results) else 1


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------

def _add_common(p: argparse.ArgumentParser, default_x: str | None):
    p.add_argument("--x", default=default_x, help="comma-separated x values")
    p.add_argument("--x-min", type=float, default=1.0)
    p.add_argument("--x-max", type=float, default=5.0)
    p.add_argument("--x-points", type=int, default=40)
    p.add_argument("--n-steps", type=int, default=None)
    p.add_argument("--y-i", type=float, default=-80.0, help="grid start")
    p.add_argument(
        "--y-f", type=float, default=None, help="grid end (default -x + 2)"
    )
    p.add_argument("--out-dir", default="out")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cosmopair",
        description="Pair creation in a sudden de Sitter-to-radiation transition: "
        "benchmark, Trotterized engines, sampling, and mitigation.",
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("sweep", help="pair number vs x for chosen methods")
    _add_common(p, default_x=None)
    p.add_argument("--methods", default="analytic,matrix,statevector")
    p.add_argument("--shots", type=int, default=None)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--factors", default="1,1.5,2")
    p.add_argument("--model-file", default=None)
    p.add_argument("--workers", type=int, default=None)
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("trajectory", help="time-resolved pair occupation")
    _add_common(p, default_x="1.5,2.0")
    p.set_defaults(func=cmd_trajectory)

    p = sub.add_parser("noise-study", help="raw/mitigated/extrapolated estimates")
    _add_common(p, default_x="1.3,1.5,1.8,2.0,2.2")
    p.add_argument("--shots", type=int, default=None)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--factors", default="1,1.5,2")
    p.add_argument("--model-file", default=None)
    p.set_defaults(func=cmd_noise_study)

    p = sub.add_parser("dump-schedule", help="per-slice coefficients as JSON")
    _add_common(p, default_x="2.0")
    p.set_defaults(func=cmd_dump_schedule)

    p = sub.add_parser("dump-circuit", help="synthesized gate list as text")
    _add_common(p, default_x="2.0")
    p.set_defaults(func=cmd_dump_circuit)

    p = sub.add_parser("verify", help="run the built-in check suite")
    p.set_defaults(func=cmd_verify)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
