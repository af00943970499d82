"""Truncations of sum sin(kx)/(k ln k): the conjugate sup-norm W(N) grows like
ln ln N while f stays bounded, and at fixed h the truncated conjugate integral
lags further behind as N grows.

    python scripts/log_sine_growth.py [--h 0.01]
"""

import argparse

from zamansky import classify_convergence, sup_norm, zamansky_profile
from zamansky.corpus import log_sine_series


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--h", type=float, default=0.01, help="fixed truncation for the lag column")
    parser.add_argument("--max-power", type=int, default=16)
    args = parser.parse_args()

    print(f"{'N':>7} {'sup f':>8} {'W(N)':>8} {'M(h) at h=' + repr(args.h):>16} {'alpha':>7}  verdict")
    for p in range(8, args.max_power + 1, 2):
        N = 2**p
        entry = log_sine_series(N, 2 ** (p + 2))
        profile = zamansky_profile(entry.f)
        report = classify_convergence(profile)
        lag = zamansky_profile(entry.f, 3, 2 * args.h, args.h).sup_dev[-1]
        print(f"{N:>7} {sup_norm(entry.f, 2):8.4f} {sup_norm(entry.exact_conjugate, 1):8.4f} "
              f"{lag:16.6f} {report.alpha:7.3f}  {report.verdict.value}")


if __name__ == "__main__":
    main()
