"""Boundary functions with known conjugates and known convergence behaviour."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any

import numpy as np

from .core import DomainError, FourierCoefficients, Grid, PeriodicFunction, analyze
from .diagnostics import Verdict


@dataclass(frozen=True)
class CorpusEntry:
    name: str
    f: PeriodicFunction
    exact_conjugate: PeriodicFunction | None
    antiderivative: PeriodicFunction | None
    expected_verdict: Verdict
    provenance: str
    params: dict[str, Any] = field(default_factory=dict)


def _poly(cos, sin, n) -> PeriodicFunction:
    return PeriodicFunction.from_coefficients(FourierCoefficients(0.0, cos, sin), n)


def trig_poly(seed: int, degree: int, n: int) -> CorpusEntry:
    """Zero-mean trigonometric polynomial with coefficients uniform in [-1, 1]."""
    Grid(n)
    if not 1 <= degree < n // 2:
        raise DomainError(f"degree must satisfy 1 <= degree < n/2, got {degree} for n={n}")
    rng = np.random.default_rng(seed)
    a = rng.uniform(-1.0, 1.0, degree)
    b = rng.uniform(-1.0, 1.0, degree)
    k = np.arange(1, degree + 1, dtype=float)
    return CorpusEntry(
        name="trig_poly",
        f=_poly(a, b, n),
        exact_conjugate=_poly(-b, a, n),
        antiderivative=_poly(-b / k, a / k, n),
        expected_verdict=Verdict.UNIFORM,
        provenance=f"numpy default_rng({seed}) uniform coefficients, degree {degree}",
        params={"seed": seed, "degree": degree, "n": n},
    )


def log_sine_weights(N: int) -> np.ndarray:
    """1 / (k ln k) for k = 2..N, placed at index k - 1."""
    k = np.arange(1, N + 1, dtype=float)
    w = np.zeros(N)
    w[1:] = 1.0 / (k[1:] * np.log(k[1:]))
    return w


def log_sine_series(N: int, n: int) -> CorpusEntry:
    """f = sum_{k=2}^N sin(kx) / (k ln k).

    The full series converges uniformly, but its conjugate -sum cos(kx)/(k ln k)
    diverges at x = 0 like ln ln N, so truncations degrade without bound.
    """
    Grid(n)
    if not 4 <= N <= n // 2 - 1:
        raise DomainError(f"N must satisfy 4 <= N <= n/2 - 1, got {N} for n={n}")
    w = log_sine_weights(N)
    k = np.arange(1, N + 1, dtype=float)
    zero = np.zeros(N)
    return CorpusEntry(
        name="log_sine_series",
        f=_poly(zero, w, n),
        exact_conjugate=_poly(-w, zero, n),
        antiderivative=_poly(-w / k, zero, n),
        # The truncation is a trig polynomial; at default thresholds its slow
        # decay leaves M(h_min) above tol_abs with alpha well above 0.05.
        expected_verdict=Verdict.INCONCLUSIVE,
        provenance="truncated classical sine series with divergent conjugate at 0",
        params={"N": N, "n": n},
    )


def holder_cusp(alpha: float, n: int) -> CorpusEntry:
    """Interpolant of |sin(x/2)|^alpha, Hoelder continuous of order alpha."""
    grid = Grid(n)
    if not 0.0 < alpha < 1.0:
        raise DomainError(f"alpha must lie in (0, 1), got {alpha}")
    f = analyze(np.abs(np.sin(grid.points / 2.0)) ** alpha)
    return CorpusEntry(
        name="holder_cusp",
        f=f,
        exact_conjugate=None,
        antiderivative=None,
        # Hoelder continuity makes the conjugate continuous; at default
        # thresholds the pipeline confirms it for alpha >= 0.5, n >= 1024.
        expected_verdict=Verdict.UNIFORM,
        provenance=f"samples of |sin(x/2)|^{alpha} on {n} points",
        params={"alpha": alpha, "n": n},
    )


GENERATORS = {
    "trig_poly": trig_poly,
    "log_sine_series": log_sine_series,
    "holder_cusp": holder_cusp,
}


def corpus_entry(name: str, **params) -> CorpusEntry:
    try:
        generator = GENERATORS[name]
    except KeyError:
        raise KeyError(f"unknown corpus entry {name!r}; choose from {sorted(GENERATORS)}") from None
    return generator(**params)
