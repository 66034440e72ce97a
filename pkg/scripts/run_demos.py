#!/usr/bin/env python3
"""Run all three reference experiments and print the written files."""
import argparse
from pathlib import Path

from sommetrics.demos import EXPERIMENTS, run_demo


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--outdir", default="demo_output", help="base output directory")
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()

    for experiment in EXPERIMENTS:
        result = run_demo(experiment, Path(args.outdir) / experiment, seed=args.seed)
        for path in result["files"]:
            print(path)


if __name__ == "__main__":
    main()
