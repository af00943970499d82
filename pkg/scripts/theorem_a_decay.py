"""Gap between the Abel conjugate at radius r and the truncated conjugate
integral at h = 1 - r, with its two-term split, for a few corpus members.

    python scripts/theorem_a_decay.py
"""

import numpy as np

from zamansky import PeriodicFunction, theorem_a_report
from zamansky.corpus import holder_cusp, log_sine_series, trig_poly

RADII = [0.0, 0.5, 0.9, 0.99, 0.999, 0.9999]


def show(name, f):
    rep = theorem_a_report(f, RADII)
    print(name)
    print(f"  {'r':>8} {'G':>12} {'G1':>12} {'G2':>12}")
    for r, g, g1, g2 in rep.rows():
        print(f"  {r:8.4f} {g:12.4e} {g1:12.4e} {g2:12.4e}")


def main():
    show("cos x", PeriodicFunction.from_callable(np.cos, 64))
    show("trig_poly(0, 8, 256)", trig_poly(0, 8, 256).f)
    show("holder_cusp(0.5, 4096)", holder_cusp(0.5, 4096).f)
    show("log_sine_series(4096, 16384)", log_sine_series(4096, 16384).f)


if __name__ == "__main__":
    main()
