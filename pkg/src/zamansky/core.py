"""Periodic functions on the circle: grids, Fourier analysis and synthesis,
off-grid evaluation, and the uniform norm / modulus of continuity.

A :class:`PeriodicFunction` carries both its samples on a uniform grid of
``n`` points and the real Fourier coefficients of its trigonometric
interpolant::

    f(x) = a0/2 + sum_{k=1}^{n/2} (a_k cos kx + b_k sin kx)

The last slot ``k = n/2`` is the Nyquist mode. Its cosine coefficient is
stored as the effective amplitude (already halved relative to the plain
``(2/n) sum f cos kx`` formula) and its sine coefficient is always zero,
since ``sin(n x / 2)`` vanishes on the grid.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.ndimage import maximum_filter1d, minimum_filter1d

TWO_PI = 2.0 * np.pi

# Bound on (len(x) * harmonics) per block in direct evaluation.
_EVAL_BLOCK = 1 << 22


class InputError(ValueError):
    """Malformed input: wrong lengths, non-finite values, bad grid size."""


class DomainError(ValueError):
    """A numeric argument lies outside the operation's domain."""


class ConvergenceError(RuntimeError):
    """Adaptive quadrature exhausted its panel budget before reaching tol."""

    def __init__(self, message, estimate, error):
        super().__init__(message)
        self.estimate = estimate
        self.error = error


def _frozen(values) -> np.ndarray:
    arr = np.array(values, dtype=float)
    arr.setflags(write=False)
    return arr


@dataclass(frozen=True)
class Grid:
    """Uniform grid x_j = 2*pi*j/n on [0, 2*pi)."""

    n: int

    def __post_init__(self):
        n = self.n
        if isinstance(n, (bool, np.bool_)) or not isinstance(n, (int, np.integer)):
            raise InputError(f"grid size must be an integer, got {n!r}")
        if n < 4 or n & (n - 1):
            raise InputError(f"grid size must be a power of two >= 4, got {n}")
        object.__setattr__(self, "n", int(n))

    @property
    def spacing(self) -> float:
        return TWO_PI / self.n

    @property
    def points(self) -> np.ndarray:
        return TWO_PI * np.arange(self.n) / self.n


@dataclass(frozen=True)
class FourierCoefficients:
    """Real Fourier data ``a0, (a_k, b_k)_{k=1..m}``; the mean is ``a0/2``."""

    a0: float
    cos: np.ndarray
    sin: np.ndarray

    def __post_init__(self):
        cos = _frozen(self.cos).reshape(-1)
        sin = _frozen(self.sin).reshape(-1)
        if cos.shape != sin.shape:
            raise InputError(f"cos/sin length mismatch: {cos.size} vs {sin.size}")
        a0 = float(self.a0)
        if not (np.isfinite(a0) and np.all(np.isfinite(cos)) and np.all(np.isfinite(sin))):
            raise InputError("Fourier coefficients must be finite")
        object.__setattr__(self, "a0", a0)
        object.__setattr__(self, "cos", cos)
        object.__setattr__(self, "sin", sin)

    @property
    def m(self) -> int:
        return self.cos.size

    @property
    def degree(self) -> int:
        """Largest k with (a_k, b_k) != (0, 0); zero for constants."""
        nz = np.flatnonzero((self.cos != 0) | (self.sin != 0))
        return int(nz[-1]) + 1 if nz.size else 0

    def padded(self, m: int) -> "FourierCoefficients":
        """Copy with exactly ``m`` harmonics (zero-padded or truncated)."""
        cos = np.zeros(m)
        sin = np.zeros(m)
        keep = min(m, self.m)
        cos[:keep] = self.cos[:keep]
        sin[:keep] = self.sin[:keep]
        return FourierCoefficients(self.a0, cos, sin)


def _spectrum(coeffs: FourierCoefficients, size: int) -> np.ndarray:
    """Half-spectrum of length ``size//2 + 1`` for ``np.fft.irfft(., size)``."""
    spec = np.zeros(size // 2 + 1, dtype=complex)
    spec[0] = size * coeffs.a0 / 2.0
    m = coeffs.m
    if m > size // 2:
        raise InputError(f"{m} harmonics do not fit a grid of {size} points")
    spec[1 : m + 1] = (size / 2.0) * (coeffs.cos - 1j * coeffs.sin)
    if m == size // 2:
        # irfft reads the Nyquist bin as a plain cosine of weight 1/size.
        spec[m] = size * coeffs.cos[-1]
    return spec


def synthesize(coeffs: FourierCoefficients, n: int) -> np.ndarray:
    """Values of the trigonometric polynomial on the ``n``-point grid."""
    return np.fft.irfft(_spectrum(coeffs, n), n)


@dataclass(frozen=True)
class PeriodicFunction:
    """Real continuous 2*pi-periodic function held as samples + coefficients.

    Build one with :func:`analyze` (from samples), :meth:`from_coefficients`
    or :meth:`from_callable`; the constructor itself does not check that the
    two representations agree.
    """

    grid: Grid
    samples: np.ndarray
    coeffs: FourierCoefficients

    @classmethod
    def from_coefficients(cls, coeffs: FourierCoefficients, n: int | None = None) -> "PeriodicFunction":
        """Place a trigonometric polynomial on a grid.

        With ``n`` omitted the smallest power of two that holds the
        polynomial without touching the Nyquist slot is used.
        """
        if n is None:
            n = max(4, 1 << int(np.ceil(np.log2(2 * coeffs.degree + 2))))
        grid = Grid(n)
        if coeffs.degree > n // 2:
            raise InputError(f"degree {coeffs.degree} does not fit a grid of {n} points")
        full = coeffs.padded(n // 2)
        if full.sin[-1] != 0.0:
            raise InputError("a sine term at the Nyquist frequency vanishes on the grid")
        return cls(grid, _frozen(synthesize(full, n)), full)

    @classmethod
    def from_callable(cls, func, n: int) -> "PeriodicFunction":
        return analyze(func(Grid(n).points))

    @property
    def n(self) -> int:
        return self.grid.n

    @property
    def mean(self) -> float:
        return self.coeffs.a0 / 2.0

    def _combine(self, other: "PeriodicFunction", sign: float) -> "PeriodicFunction":
        if not isinstance(other, PeriodicFunction):
            return NotImplemented
        if other.n != self.n:
            raise InputError(f"grid mismatch: {self.n} vs {other.n}")
        c, d = self.coeffs, other.coeffs
        coeffs = FourierCoefficients(c.a0 + sign * d.a0, c.cos + sign * d.cos, c.sin + sign * d.sin)
        return PeriodicFunction.from_coefficients(coeffs, self.n)

    def __add__(self, other):
        return self._combine(other, 1.0)

    def __sub__(self, other):
        return self._combine(other, -1.0)

    def __mul__(self, scale):
        if not np.isscalar(scale):
            return NotImplemented
        c = self.coeffs
        return PeriodicFunction.from_coefficients(
            FourierCoefficients(scale * c.a0, scale * c.cos, scale * c.sin), self.n
        )

    __rmul__ = __mul__

    def __neg__(self):
        return self * -1.0


def analyze(samples) -> PeriodicFunction:
    """Discrete Fourier analysis of samples on the uniform grid of their length.

    ``a_k = (2/n) sum f(x_j) cos(k x_j)``, ``b_k`` likewise with sine, and
    ``a0 = (2/n) sum f(x_j)``. The Nyquist cosine is stored at half that
    weight so that plain synthesis reproduces the samples.
    """
    values = np.asarray(samples, dtype=float).reshape(-1)
    grid = Grid(values.size)
    if not np.all(np.isfinite(values)):
        raise InputError("samples must be finite")
    n = grid.n
    spec = np.fft.rfft(values)
    a = (2.0 / n) * spec.real
    b = -(2.0 / n) * spec.imag
    a[-1] *= 0.5
    b[-1] = 0.0
    coeffs = FourierCoefficients(a[0], a[1:], b[1:])
    return PeriodicFunction(grid, _frozen(values), coeffs)


def evaluate(f: PeriodicFunction, x):
    """Trigonometric interpolant of ``f`` at angle(s) ``x`` (radians)."""
    xs = np.mod(np.asarray(x, dtype=float), TWO_PI)
    flat = xs.reshape(-1)
    c = f.coeffs
    m = c.degree
    k = np.arange(1, m + 1, dtype=float)
    a, b = c.cos[:m], c.sin[:m]
    out = np.empty(flat.size)
    step = max(1, _EVAL_BLOCK // max(1, m))
    for lo in range(0, flat.size, step):
        phase = np.outer(flat[lo : lo + step], k)
        out[lo : lo + step] = c.a0 / 2.0 + np.cos(phase) @ a + np.sin(phase) @ b
    if xs.ndim == 0:
        return float(out[0])
    return out.reshape(xs.shape)


def refine(f: PeriodicFunction, oversample: int = 8) -> np.ndarray:
    """Interpolant values on the uniform grid of ``oversample * n`` points."""
    if oversample < 1:
        raise DomainError(f"oversample must be >= 1, got {oversample}")
    return synthesize(f.coeffs, oversample * f.n)


def sup_norm(f: PeriodicFunction, oversample: int = 8) -> float:
    """Max of |f| over the refined grid; a proxy for the true supremum."""
    return float(np.max(np.abs(refine(f, oversample))))


def modulus_of_continuity(f: PeriodicFunction, delta: float, oversample: int = 8) -> float:
    """Largest |f(x) - f(y)| over refined-grid pairs with |x - y| <= delta."""
    if not 0.0 < delta <= np.pi:
        raise DomainError(f"delta must lie in (0, pi], got {delta}")
    values = refine(f, oversample)
    size = values.size
    # Window of s+1 consecutive points spans s*spacing <= delta.
    s = int(np.floor(delta / (TWO_PI / size) * (1.0 + 1e-12)))
    if s == 0:
        return 0.0
    width = min(s + 1, size)
    hi = maximum_filter1d(values, size=width, mode="wrap")
    lo = minimum_filter1d(values, size=width, mode="wrap")
    return float(np.max(hi - lo))


def derivative(f: PeriodicFunction) -> PeriodicFunction:
    """Termwise derivative; the Nyquist cosine differentiates to a grid-invisible sine and is dropped."""
    c = f.coeffs
    k = np.arange(1, c.m + 1, dtype=float)
    cos = k * c.sin
    sin = -k * c.cos
    cos[-1] = 0.0
    sin[-1] = 0.0
    return PeriodicFunction.from_coefficients(FourierCoefficients(0.0, cos, sin), f.n)
