#!/usr/bin/env python3
"""Shallow-circuit noise protocol on the synthetic model.

Mirrors the shallow-hardware measurement layout: single-step circuits at
x = 1.3, 1.5, 1.8, 2.0, 2.2 with 4096 shots each, reporting raw,
readout-mitigated, and zero-noise-extrapolated pair numbers plus the leakage
triplet.  The noise model defaults to the built-in calibration-derived
magnitudes; pass --model-file to study a different model.

Usage:
    python scripts/run_hardware_protocol.py [--out-dir out/hardware] [--seed 0]
"""

import argparse
import sys

from cosmopair.cli import main


def run():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--out-dir", default="out/hardware")
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--model-file", default=None)
    args = parser.parse_args()
    argv = [
        "noise-study",
        "--seed", str(args.seed),
        "--out-dir", args.out_dir,
    ]
    if args.model_file:
        argv += ["--model-file", args.model_file]
    return main(argv)


if __name__ == "__main__":
    sys.exit(run())
