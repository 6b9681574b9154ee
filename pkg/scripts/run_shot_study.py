#!/usr/bin/env python3
"""Finite-shot study: sampled pair number at three shot budgets.

Runs the N=500 circuit and samples 8192, 32768, and 131072 shots per x, one
sweep file per budget, so the shrinking scatter around the statevector curve
can be plotted directly.

Usage:
    python scripts/run_shot_study.py [--out-dir out/shots] [--seed 0]
"""

import argparse
import sys

from cosmopair.cli import main

SHOT_BUDGETS = (8192, 32768, 131072)


def run():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--out-dir", default="out/shots")
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()
    for shots in SHOT_BUDGETS:
        code = main(
            [
                "sweep",
                "--methods", "statevector,shots",
                "--n-steps", "500",
                "--shots", str(shots),
                "--seed", str(args.seed),
                "--out-dir", f"{args.out_dir}/shots_{shots}",
            ]
        )
        if code != 0:
            return code
    return 0


if __name__ == "__main__":
    sys.exit(run())
