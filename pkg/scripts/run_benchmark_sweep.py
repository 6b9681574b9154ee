#!/usr/bin/env python3
"""Benchmark sweep: analytic curve vs both noiseless engines.

Produces the data behind the simulator-validation comparison: the closed-form
pair number, the 4x4 matrix reference at N=2500, and the four-qubit circuit
statevector at N=1000, on a 40-point log grid over x in [1, 5].

Usage:
    python scripts/run_benchmark_sweep.py [--out-dir out/benchmark]
"""

import argparse
import sys

from cosmopair.cli import main


def run():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--out-dir", default="out/benchmark")
    args = parser.parse_args()
    return main(
        [
            "sweep",
            "--methods", "analytic,matrix,statevector",
            "--out-dir", args.out_dir,
        ]
    )


if __name__ == "__main__":
    sys.exit(run())
