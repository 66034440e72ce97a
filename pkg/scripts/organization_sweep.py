#!/usr/bin/env python3
"""Sweep map disorder from intact to fully permuted and tabulate the indices.

Trains one 10x10 map on the unit square, then swaps a growing fraction of
prototype pairs and prints how each organization index responds. Useful for
eyeballing index sensitivity; writes CSV to stdout.
"""
import argparse
import sys

import numpy as np

from sommetrics import (
    CodeBook,
    Dataset,
    TrainerConfig,
    c_measure,
    combined_error,
    kruskal_shepard_error,
    topographic_error,
    train_som,
)


def swap_fraction(codebook: CodeBook, fraction: float, rng: np.random.Generator) -> CodeBook:
    protos = codebook.prototypes.copy()
    n_swaps = int(fraction * codebook.n_units / 2)
    if n_swaps:
        idx = rng.choice(codebook.n_units, size=2 * n_swaps, replace=False)
        a, b = idx[:n_swaps], idx[n_swaps:]
        protos[a], protos[b] = protos[b].copy(), protos[a].copy()
    return CodeBook(protos, codebook.grid)


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--samples", type=int, default=5000)
    parser.add_argument("--fractions", default="0,0.1,0.2,0.4,0.6,0.8,1.0",
                        help="comma-separated swap fractions")
    args = parser.parse_args()

    rng = np.random.default_rng(args.seed)
    data = Dataset(rng.random((args.samples, 2)))
    trained = train_som(data, TrainerConfig(10, 10, seed=args.seed))

    writer = sys.stdout
    writer.write("swap_fraction,topographic_error,combined_error,kruskal_shepard_error,c_measure\n")
    for fraction in (float(f) for f in args.fractions.split(",")):
        cb = swap_fraction(trained, fraction, np.random.default_rng(args.seed + 1))
        writer.write(
            f"{fraction},{topographic_error(cb, data)!r},{combined_error(cb, data)!r},"
            f"{kruskal_shepard_error(cb, data)!r},{c_measure(cb, data)!r}\n"
        )


if __name__ == "__main__":
    main()
