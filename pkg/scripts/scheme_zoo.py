#!/usr/bin/env python3
"""Tabulate the testing schemes derived from small geometries.

For each construction, prints samples, tests, the certified level, the
exact maximal level found by sweep, and the tests-per-sample ratio.
Grids trade many tests for high d at few samples; the symplectic
quadrangles balance n = k with d = q.
"""

import argparse

from resgt.conditions import max_d
from resgt.geometry import construct_grid, construct_symplectic, scheme_source, to_testing_scheme


def parse_args():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--grids", type=int, nargs="+", default=[1, 2, 3, 4])
    parser.add_argument("--primes", type=int, nargs="+", default=[2, 3])
    parser.add_argument("--workers", type=int, default=1)
    return parser.parse_args()


def main():
    args = parse_args()
    descriptors = [construct_grid(s) for s in args.grids]
    descriptors += [construct_symplectic(q) for q in args.primes]
    print(f"{'source':>10} {'samples':>8} {'tests':>6} {'certified':>10} {'max_d':>6} {'k/n':>6}")
    for gq in descriptors:
        scheme = to_testing_scheme(gq.pls, workers=args.workers)
        exact = max_d(scheme.matrix, workers=args.workers)
        ratio = scheme.k / scheme.n
        print(
            f"{scheme_source(gq):>10} {scheme.n:>8} {scheme.k:>6} "
            f"{scheme.certified_d:>10} {exact:>6} {ratio:>6.2f}"
        )


if __name__ == "__main__":
    main()
