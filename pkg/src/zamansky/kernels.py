"""Singular conjugate kernel, Poisson kernels and truncated kernel moments.

The kernels accept scalars or numpy arrays and return the same shape.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .core import DomainError

# Below this, (1/2) cot(t/2) comes from its Laurent series.
LAURENT_CUTOFF = 1e-2


def _as_output(values, like):
    return float(values) if np.ndim(like) == 0 else values


def half_cot(t):
    """(1/2) cot(t/2) for 0 < t <= pi.

    Near zero the Laurent series 1/t - t/12 - t^3/720 is used; its next
    term is t^5/30240, below 1e-15 relative at the cutoff.
    """
    ts = np.asarray(t, dtype=float)
    if np.any(~(ts > 0.0)) or np.any(ts > np.pi):
        raise DomainError("half_cot needs 0 < t <= pi")
    small = ts < LAURENT_CUTOFF
    with np.errstate(divide="ignore"):
        direct = 0.5 / np.tan(0.5 * ts)
    laurent = 1.0 / ts - ts / 12.0 - ts**3 / 720.0
    out = np.where(small, laurent, direct)
    # tan(pi/2) is finite in floating point; the exact value is 0.
    out = np.where(ts == np.pi, 0.0, out)
    return _as_output(out, t)


def _check_radius(r):
    if not 0.0 <= r < 1.0:
        raise DomainError(f"radius must lie in [0, 1), got {r}")


def poisson_kernel(r: float, t):
    """(1 - r^2) / (2 (1 - 2 r cos t + r^2)); integrates to pi over a period."""
    _check_radius(r)
    ts = np.asarray(t, dtype=float)
    out = (1.0 - r * r) / (2.0 * (1.0 - 2.0 * r * np.cos(ts) + r * r))
    return _as_output(out, t)


def conj_poisson_kernel(r: float, t):
    """r sin t / (1 - 2 r cos t + r^2), i.e. sum_k r^k sin kt."""
    _check_radius(r)
    ts = np.asarray(t, dtype=float)
    out = r * np.sin(ts) / (1.0 - 2.0 * r * np.cos(ts) + r * r)
    return _as_output(out, t)


@dataclass(frozen=True)
class TruncationMoments:
    """tau[k-1] = (1/pi) * integral_h^pi sin(kt) cot(t/2) dt for k = 1..m.

    tau_k(h) is the factor by which truncating the conjugate integral at h
    scales the k-th harmonic of the conjugate function.
    """

    h: float
    tau: np.ndarray

    def __getitem__(self, k: int) -> float:
        if k < 1:
            raise IndexError("moments are indexed from k = 1")
        return float(self.tau[k - 1])

    @property
    def m(self) -> int:
        return self.tau.size


def truncated_moments(m: int, h: float) -> TruncationMoments:
    """Closed-form moments from sin(kt) cot(t/2) = 1 + 2 sum_{j<k} cos jt + cos kt.

    tau_k(h) = ((pi - h) - 2 S_k - sin(kh)/k) / pi with the running sum
    S_k = S_{k-1} + sin((k-1)h)/(k-1).
    """
    if m < 1:
        raise DomainError(f"moment count must be >= 1, got {m}")
    if not 0.0 < h <= np.pi:
        raise DomainError(f"h must lie in (0, pi], got {h}")
    if h == np.pi:
        tau = np.zeros(m)
    else:
        k = np.arange(1, m + 1, dtype=float)
        ratio = np.sin(k * h) / k
        partial = np.concatenate(([0.0], np.cumsum(ratio[:-1])))
        tau = ((np.pi - h) - 2.0 * partial - ratio) / np.pi
    tau.setflags(write=False)
    return TruncationMoments(float(h), tau)
