"""Agreement and cost of the two routes to the truncated conjugate integral:
per-harmonic moments (whole grid at once) against graded Gauss-Legendre
quadrature (one point at a time).

    python scripts/path_timing.py [--degree 32] [--n 256]
"""

import argparse
import time

import numpy as np

from zamansky import evaluate, truncated_conjugate_fast, truncated_conjugate_quadrature
from zamansky.corpus import trig_poly


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--degree", type=int, default=32)
    parser.add_argument("--n", type=int, default=256)
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()

    f = trig_poly(args.seed, args.degree, args.n).f
    xs = f.grid.points
    print(f"{'h':>8} {'fast [s]':>10} {'quad [s]':>10} {'max diff':>10}")
    for h in (0.5, 0.1, 0.01, 0.001, 1e-4):
        t0 = time.perf_counter()
        fast = evaluate(truncated_conjugate_fast(f, h), xs)
        t1 = time.perf_counter()
        slow = np.array([truncated_conjugate_quadrature(f, x, h) for x in xs])
        t2 = time.perf_counter()
        print(f"{h:8.0e} {t1 - t0:10.4f} {t2 - t1:10.4f} {np.max(np.abs(fast - slow)):10.2e}")


if __name__ == "__main__":
    main()
