"""Histogram of central polynomial values over all matrix-unit tuples (t=2),
plus a few random integer tuples for t=2 and t=3.

    python scripts/regev_sweep.py [--random 5] [--seed 0]
"""
import argparse
import time
from collections import Counter

import numpy as np

from codimlab.regev import RegevDescriptor, is_scalar, regev_eval_dp, sweep_values


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--random", type=int, default=5)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    t0 = time.perf_counter()
    hist, non_scalar = Counter(), 0
    for _, v in sweep_values(2):
        non_scalar += not is_scalar(v)
        hist[int(v[0, 0])] += 1
    print(f"# t=2 sweep: {sum(hist.values())} tuples, {non_scalar} non-scalar, "
          f"{time.perf_counter() - t0:.1f} s")
    for val, cnt in sorted(hist.items()):
        print(f"{val}\t{cnt}")

    rng = np.random.default_rng(args.seed)
    for t in (2, 3):
        desc = RegevDescriptor(t)
        for k in range(args.random):
            X = rng.integers(-2, 3, (t * t, t, t)).astype(object)
            Y = rng.integers(-2, 3, (t * t, t, t)).astype(object)
            v = regev_eval_dp(desc, X, Y)
            print(f"t={t}\t#{k}\tscalar={is_scalar(v)}\tvalue={v[0, 0]}")


if __name__ == "__main__":
    main()
