import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from zamansky.core import DomainError, InputError, analyze, sup_norm
from zamansky.corpus import holder_cusp, log_sine_series, trig_poly
from zamansky.diagnostics import (
    ConvergenceProfile,
    DiagnosticConfig,
    Verdict,
    classify_convergence,
    disc_algebra_test,
    fit_decay,
    h_grid,
    theorem_a_report,
    zamansky_profile,
)
from zamansky.transforms import conj_spectral

from conftest import poly, trig_polys


def tau_oracle(k, h):
    partial = sum(math.sin(j * h) / j for j in range(1, k))
    return ((math.pi - h) - 2 * partial - math.sin(k * h) / k) / math.pi


def test_h_grid():
    hs = h_grid(5, 1.0, 1e-4)
    assert hs[0] == pytest.approx(1.0) and hs[-1] == pytest.approx(1e-4)
    assert np.allclose(hs[1:] / hs[:-1], 0.1)
    for args in ((2, 1.0, 0.1), (5, 0.1, 1.0), (5, 4.0, 0.1), (5, 1.0, 0.0)):
        with pytest.raises(DomainError):
            h_grid(*args)


# ---------------------------------------------------------------- profiles

def test_profile_cos_closed_form():
    p = zamansky_profile(poly([1.0], n=64))
    expected = (p.h_values + np.sin(p.h_values)) / np.pi
    assert np.max(np.abs(p.sup_dev - expected)) <= 1e-12
    p = zamansky_profile(poly([1.0], n=64), 3, 1.0, 0.01)
    assert p.sup_dev[-1] == pytest.approx(0.0063662, abs=1e-7)


@pytest.mark.parametrize("k", [1, 2, 4, 16])
def test_profile_single_harmonics(k):
    f = poly([0.0] * (k - 1) + [1.0], n=64)
    p = zamansky_profile(f, 10, math.pi, 1e-4)
    expected = np.array([1 - tau_oracle(k, h) for h in p.h_values])
    assert np.max(np.abs(p.sup_dev - expected)) <= 1e-12


def test_profile_cos2_value():
    p = zamansky_profile(poly([0.0, 1.0], n=16), 3, 1.0, 0.25)
    assert p.sup_dev[1] == pytest.approx(0.598291, abs=1e-6)


def test_profile_zero():
    p = zamansky_profile(analyze(np.zeros(16)))
    assert np.all(p.sup_dev == 0.0) and np.all(p.cauchy == 0.0)


@settings(max_examples=25)
@given(trig_polys(max_degree=10))
def test_profile_invariants(f):
    p = zamansky_profile(f, 8, math.pi, 1e-4)
    assert p.sup_dev[0] == pytest.approx(sup_norm(conj_spectral(f)), abs=1e-10)
    halves = zamansky_profile(f, 8, math.pi / 2, 0.5e-4)
    assert np.all(p.cauchy <= p.sup_dev + halves.sup_dev + 1e-12)


def test_profile_threads_deterministic():
    f = trig_poly(7, 20, 128).f
    a = zamansky_profile(f, threads=1)
    b = zamansky_profile(f, threads=4)
    assert a.rows() == b.rows()


def test_profile_validation():
    with pytest.raises(InputError):
        ConvergenceProfile([0.1, 0.2], [0.0, 0.0], [0.0, 0.0])
    with pytest.raises(InputError):
        ConvergenceProfile([0.2, 0.1], [-1.0, 0.0], [0.0, 0.0])
    with pytest.raises(InputError):
        ConvergenceProfile([0.2, 0.1], [np.nan, 0.0], [0.0, 0.0])


# ---------------------------------------------------------------- classifier

def test_classify_cos():
    r = classify_convergence(zamansky_profile(poly([1.0], n=64), 24, 0.5, 1e-4))
    assert r.verdict is Verdict.UNIFORM
    assert r.alpha == pytest.approx(1.0, abs=0.01)


def test_classify_zero():
    r = classify_convergence(zamansky_profile(analyze(np.zeros(8))))
    assert r.verdict is Verdict.UNIFORM
    assert r.alpha is None


def test_classify_log_sine_not_uniform():
    f = log_sine_series(4096, 16384).f
    r = classify_convergence(zamansky_profile(f, 24, 0.5, 2 * math.pi / 4096))
    assert r.verdict is not Verdict.UNIFORM
    assert r.profile.sup_dev[-1] > 10 * 1e-3


def test_log_sine_deviation_grows_with_truncation():
    # at fixed h, the truncated conjugate lags further behind as N grows
    lags = []
    for N in (255, 1023, 4095, 16383):
        p = zamansky_profile(log_sine_series(N, 2 * (N + 1)).f, 3, 0.1, 0.001)
        lags.append(p.sup_dev[-1])
    assert all(b > a for a, b in zip(lags, lags[1:]))


def test_classify_rules_on_synthetic_profiles():
    h = np.geomspace(1.0, 1e-5, 12)
    stalled = ConvergenceProfile(h, np.r_[np.linspace(1, 0.2, 8), [0.2, 0.2, 0.21, 0.22]], np.zeros(12))
    assert classify_convergence(stalled).verdict is Verdict.NON_UNIFORM
    flat = ConvergenceProfile(h, 0.5 * h**0.01, np.zeros(12))
    assert classify_convergence(flat).verdict is Verdict.NON_UNIFORM
    slow = ConvergenceProfile(h, 0.5 * h**0.2, np.zeros(12))
    assert classify_convergence(slow).verdict is Verdict.INCONCLUSIVE
    small_but_flat = ConvergenceProfile(h, 1e-4 * h**0.1, np.zeros(12))
    assert classify_convergence(small_but_flat).verdict is Verdict.INCONCLUSIVE
    with pytest.raises(InputError):
        classify_convergence(ConvergenceProfile(h[:2], [0.1, 0.05], [0.0, 0.0]))


def test_fit_decay_power_law():
    h = np.geomspace(1e-1, 1e-5, 9)
    alpha, constant = fit_decay(h, 3.0 * h**0.75)
    assert alpha == pytest.approx(0.75, abs=1e-12)
    assert constant == pytest.approx(3.0, rel=1e-10)
    assert fit_decay(h, np.zeros_like(h)) == (None, None)


@given(st.floats(0.01, 100.0), st.booleans())
@settings(max_examples=20)
def test_scaling_keeps_exponent(c, flip):
    f = trig_poly(3, 6, 32).f
    scale = -c if flip else c
    base = classify_convergence(zamansky_profile(f, 8))
    scaled = classify_convergence(zamansky_profile(scale * f, 8))
    assert np.allclose(scaled.profile.sup_dev, abs(scale) * base.profile.sup_dev, rtol=1e-9, atol=1e-15)
    assert np.allclose(scaled.profile.cauchy, abs(scale) * base.profile.cauchy, rtol=1e-9, atol=1e-15)
    assert scaled.alpha == pytest.approx(base.alpha, abs=1e-9)


def test_holder_cusp_verdict():
    r = classify_convergence(zamansky_profile(holder_cusp(0.75, 4096).f))
    assert r.verdict is Verdict.UNIFORM


# ---------------------------------------------------------------- Theorem A

def test_theorem_a_cos():
    rs = [0.0, 0.9, 0.99, 0.999]
    rep = theorem_a_report(poly([1.0], n=64), rs)
    closed = [abs(r - tau_oracle(1, 1 - r)) for r in rs]
    assert np.allclose(rep.gap, closed, atol=1e-12, rtol=0)
    assert rep.gap[0] == pytest.approx(0.413842, abs=1e-6)
    assert rep.gap[1] == pytest.approx(0.036390, abs=2e-6)
    assert rep.gap[2] == pytest.approx(0.0036338, abs=1e-7)
    assert rep.gap[3] < rep.gap[1] / 50
    assert np.all(rep.triangle_ok)
    assert np.allclose(rep.abel_gap, [1 - r for r in rs])


@settings(max_examples=20)
@given(trig_polys(max_degree=10))
def test_theorem_a_invariants(f):
    rep = theorem_a_report(f, [0.0, 0.5, 0.9, 0.99, 0.999, 0.9999])
    assert np.all(rep.triangle_ok)
    assert np.all(rep.gap <= rep.abel_gap + rep.truncation_gap + 1e-12)
    assert rep.gap[-1] <= rep.gap[2] + 1e-12


def test_theorem_a_validation():
    f = poly([1.0])
    for rs in ([0.5, 0.4], [-0.1, 0.5], [0.5, 1.0], []):
        with pytest.raises(DomainError):
            theorem_a_report(f, rs)


# ---------------------------------------------------------------- disc algebra

def test_disc_algebra_polynomial():
    report, ext = disc_algebra_test(poly([1.0, 0.5], n=16))
    assert report.verdict is Verdict.UNIFORM
    assert np.allclose(ext.coefficients[:3], [0.0, 1.0, 0.5], atol=1e-12)
    assert any("finite-resolution" in note for note in report.notes)


def test_disc_algebra_constant():
    report, ext = disc_algebra_test(analyze(np.full(8, 2.5)))
    assert report.verdict is Verdict.UNIFORM
    assert ext.c0 == pytest.approx(2.5)
    assert np.all(np.abs(ext.c) < 1e-12)


def test_disc_algebra_log_sine_negative():
    report, ext = disc_algebra_test(log_sine_series(4096, 16384).f, DiagnosticConfig(threads=2))
    assert report.verdict is not Verdict.UNIFORM
    assert ext.c.size == 8192
