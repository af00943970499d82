"""Conjugate functions on the circle and in the disc.

Sign convention throughout: cos kx -> sin kx and sin kx -> -cos kx, so that
for f = sum (a_k cos kx + b_k sin kx) the conjugate is

    f~(x) = sum (a_k sin kx - b_k cos kx),

which is the h -> 0 limit of

    f~(x, h) = -(1/pi) * integral_h^pi [f(x+t) - f(x-t)] (1/2) cot(t/2) dt.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .core import (
    ConvergenceError,
    DomainError,
    FourierCoefficients,
    PeriodicFunction,
    evaluate,
)
from .kernels import half_cot, truncated_moments
from .quadrature import MAX_PANELS, QuadratureResult, graded_gauss_legendre


def _damped_conjugate(f: PeriodicFunction, factors) -> PeriodicFunction:
    c = f.coeffs
    cos = -c.sin * factors + 0.0  # no signed zeros in output
    sin = c.cos * factors
    # The Nyquist cosine would map to a sine that vanishes on the grid.
    cos[-1] = 0.0
    sin[-1] = 0.0
    return PeriodicFunction.from_coefficients(FourierCoefficients(0.0, cos, sin), f.n)


def conj_spectral(f: PeriodicFunction) -> PeriodicFunction:
    """Conjugate function by the Fourier multiplier; the result has zero mean."""
    return _damped_conjugate(f, 1.0)


def truncated_conjugate_fast(f: PeriodicFunction, h: float) -> PeriodicFunction:
    """x -> f~(x, h) exactly, via per-harmonic moments tau_k(h)."""
    moments = truncated_moments(f.coeffs.m, h)
    return _damped_conjugate(f, moments.tau)


def _check_tol(tol: float):
    if not 1e-13 <= tol <= 1e-4:
        raise DomainError(f"tol must lie in [1e-13, 1e-4], got {tol}")


def truncated_conjugate_estimate(f: PeriodicFunction, x: float, h: float, tol: float = 1e-10,
                                 max_panels: int = MAX_PANELS) -> QuadratureResult:
    """f~(x, h) by direct quadrature of the truncated integral, with error estimate."""
    if not 0.0 < h <= np.pi:
        raise DomainError(f"h must lie in (0, pi], got {h}")
    _check_tol(tol)

    def integrand(t):
        return (evaluate(f, x + t) - evaluate(f, x - t)) * half_cot(t)

    # Roundoff level of the integrand: |f(x+t) - f(x-t)| is evaluated with
    # absolute error ~ eps * sum|coeffs|, and the kernel integrates to
    # -log sin(h/2) over [h, pi].
    c = f.coeffs
    size = abs(c.a0) / 2.0 + np.sum(np.abs(c.cos)) + np.sum(np.abs(c.sin))
    floor = 1e3 * np.finfo(float).eps * size * (1.0 - np.log(np.sin(h / 2.0)))
    try:
        raw = graded_gauss_legendre(integrand, h, np.pi, tol=tol, max_panels=max_panels, abs_floor=floor)
    except ConvergenceError as exc:
        raise ConvergenceError(str(exc), -exc.estimate / np.pi, exc.error / np.pi) from None
    return QuadratureResult(-raw.value / np.pi, raw.error / np.pi, raw.panels)


def truncated_conjugate_quadrature(f: PeriodicFunction, x: float, h: float, tol: float = 1e-10,
                                   max_panels: int = MAX_PANELS) -> float:
    """Point value of f~(x, h) from graded Gauss-Legendre quadrature.

    Raises :class:`~zamansky.core.ConvergenceError` (carrying the best
    estimate) when the panel budget runs out.
    """
    return truncated_conjugate_estimate(f, x, h, tol, max_panels).value


def abel_conjugate(f: PeriodicFunction, r: float) -> PeriodicFunction:
    """Conjugate harmonic function on the circle of radius r: harmonics damped by r^k."""
    if not 0.0 <= r < 1.0:
        raise DomainError(f"radius must lie in [0, 1), got {r}")
    k = np.arange(1, f.coeffs.m + 1, dtype=float)
    return _damped_conjugate(f, r**k)


@dataclass(frozen=True)
class AnalyticExtension:
    """Power series c0 + sum_k c_k z^k whose boundary real part is u."""

    c0: float
    c: np.ndarray

    def __post_init__(self):
        c = np.array(self.c, dtype=complex).reshape(-1)
        c.setflags(write=False)
        object.__setattr__(self, "c0", float(self.c0))
        object.__setattr__(self, "c", c)

    @property
    def coefficients(self) -> np.ndarray:
        """[c0, c_1, ..., c_m] as one complex array."""
        return np.concatenate(([complex(self.c0)], self.c))


def analytic_extension(u: PeriodicFunction) -> AnalyticExtension:
    """c0 = a0/2 and c_k = a_k - i b_k; the imaginary part has zero mean."""
    c = u.coeffs
    return AnalyticExtension(c.a0 / 2.0, c.cos - 1j * c.sin)


def evaluate_extension(e: AnalyticExtension, r: float, theta):
    """Horner evaluation of the power series at z = r e^{i theta}, 0 <= r <= 1."""
    if not 0.0 <= r <= 1.0:
        raise DomainError(f"radius must lie in [0, 1], got {r}")
    thetas = np.asarray(theta, dtype=float)
    z = r * np.exp(1j * thetas)
    out = np.polynomial.polynomial.polyval(z, e.coefficients)
    return complex(out) if thetas.ndim == 0 else out


@dataclass(frozen=True)
class SmoothnessProbe:
    """Second symmetric differences of F at x, divided by the scale."""

    x: float
    scales: np.ndarray
    defects: np.ndarray

    @property
    def ratios(self) -> np.ndarray:
        """defects / scales; tends to F''(x) where F is twice differentiable."""
        return self.defects / self.scales


def smoothness_defect(F: PeriodicFunction, x: float, scales) -> SmoothnessProbe:
    """(F(x+t) + F(x-t) - 2F(x)) / t for each t; F is smooth at x when this is o(1).

    Only the sequence is reported; smoothness is an asymptotic property and
    no decision is made here.
    """
    t = np.asarray(scales, dtype=float).reshape(-1)
    if t.size == 0 or np.any(~(t > 0.0)) or np.any(np.diff(t) >= 0.0):
        raise DomainError("scales must be positive and strictly decreasing")
    centre = evaluate(F, x)
    defects = (evaluate(F, x + t) + evaluate(F, x - t) - 2.0 * centre) / t
    t.setflags(write=False)
    defects.setflags(write=False)
    return SmoothnessProbe(float(x), t, defects)
