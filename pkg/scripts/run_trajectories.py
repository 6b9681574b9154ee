#!/usr/bin/env python3
"""Time-resolved pair occupation for two representative wavelengths.

Emits the per-slice populations at N=2500 for x = 1.5 and x = 2.0 together
with the late-time benchmark column, showing the flat / rapid-growth /
plateau shape through the transition.

Usage:
    python scripts/run_trajectories.py [--out-dir out/trajectories]
"""

import argparse
import sys

from cosmopair.cli import main


def run():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--out-dir", default="out/trajectories")
    args = parser.parse_args()
    return main(["trajectory", "--n-steps", "2500", "--out-dir", args.out_dir])


if __name__ == "__main__":
    sys.exit(run())
