#!/usr/bin/env python3
"""Empirical regression for the equivalence of the five property checkers.

Draws random matrices and confirms that d-Dis, d-Rev (direct), and the
ball/closed-image/colspace routes return the same verdict at every
level.  Any disagreement is printed with the offending matrix so it can
be replayed.

Example:
    python scripts/equivalence_sweep.py --matrices 1000 --max-d 4 --seed 2
"""

import argparse
import random
import sys

from resgt.boolsemi import BoolMatrix, matrix_to_text
from resgt.conditions import equivalence_reports


def parse_args():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--matrices", type=int, default=500)
    parser.add_argument("--max-n", type=int, default=12)
    parser.add_argument("--max-k", type=int, default=12)
    parser.add_argument("--max-d", type=int, default=3)
    parser.add_argument("--seed", type=int, default=0)
    return parser.parse_args()


def main():
    args = parse_args()
    rng = random.Random(args.seed)
    checked = 0
    holding = 0
    disagreements = 0
    for _ in range(args.matrices):
        n = rng.randint(args.max_d + 1, args.max_n)
        k = rng.randint(1, args.max_k)
        H = BoolMatrix(n, k, tuple(rng.randint(0, (1 << k) - 1) for _ in range(n)))
        for d in range(1, args.max_d + 1):
            reports = equivalence_reports(H, d)
            verdicts = {name: r.holds for name, r in reports.items()}
            checked += 1
            if len(set(verdicts.values())) != 1:
                disagreements += 1
                print(f"DISAGREEMENT at d={d}: {verdicts}", file=sys.stderr)
                sys.stderr.write(matrix_to_text(H))
            elif next(iter(verdicts.values())):
                holding += 1
    print(f"checked={checked} holding={holding} failing={checked - holding - disagreements}")
    print(f"disagreements={disagreements}")
    return 1 if disagreements else 0


if __name__ == "__main__":
    sys.exit(main())
