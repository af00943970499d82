import math

import numpy as np
import pytest

from zamansky.core import DomainError, InputError, derivative, evaluate, modulus_of_continuity, sup_norm
from zamansky.corpus import corpus_entry, holder_cusp, log_sine_series, log_sine_weights, trig_poly
from zamansky.diagnostics import Verdict
from zamansky.transforms import conj_spectral


def W(N):
    """Oracle: plain summation of 1/(k ln k) for k = 2..N."""
    return math.fsum(1.0 / (k * math.log(k)) for k in range(2, N + 1))


def check_entry(entry):
    f = entry.f
    if entry.exact_conjugate is not None:
        assert sup_norm(conj_spectral(f) - entry.exact_conjugate) <= 1e-10
    if entry.antiderivative is not None:
        d = derivative(entry.antiderivative)
        assert np.max(np.abs(d.coeffs.cos - f.coeffs.cos)) <= 1e-8
        assert np.max(np.abs(d.coeffs.sin - f.coeffs.sin)) <= 1e-8
        assert f.coeffs.a0 == 0.0


def test_trig_poly_degree_one():
    e = trig_poly(0, 1, 8)
    a, b = e.f.coeffs.cos[0], e.f.coeffs.sin[0]
    assert -1 <= a <= 1 and -1 <= b <= 1
    x = np.linspace(0, 6, 7)
    assert np.allclose(evaluate(e.exact_conjugate, x), a * np.sin(x) - b * np.cos(x), atol=1e-14)
    assert e.expected_verdict is Verdict.UNIFORM


@pytest.mark.parametrize("degree,n", [(0, 8), (4, 8), (-1, 16)])
def test_trig_poly_degree_range(degree, n):
    with pytest.raises(DomainError):
        trig_poly(1, degree, n)


def test_trig_poly_bad_grid():
    with pytest.raises(InputError):
        trig_poly(1, 2, 12)


@pytest.mark.parametrize("seed,degree,n", [(42, 8, 64), (0, 31, 64), (7, 100, 256)])
def test_trig_poly_invariants(seed, degree, n):
    e = trig_poly(seed, degree, n)
    assert e.f.coeffs.degree == degree
    check_entry(e)


def test_determinism():
    a, b = trig_poly(42, 8, 64), trig_poly(42, 8, 64)
    assert a.f.samples.tobytes() == b.f.samples.tobytes()
    assert a.exact_conjugate.samples.tobytes() == b.exact_conjugate.samples.tobytes()
    c, d = holder_cusp(0.3, 64), holder_cusp(0.3, 64)
    assert c.f.coeffs.cos.tobytes() == d.f.coeffs.cos.tobytes()


def test_log_sine_entry():
    e = log_sine_series(1000, 4096)
    check_entry(e)
    assert e.expected_verdict is not Verdict.UNIFORM
    conj = e.exact_conjugate
    assert abs(evaluate(conj, 0.0)) == pytest.approx(W(1000), rel=1e-12)
    assert sup_norm(conj) == pytest.approx(W(1000), rel=1e-12)


def test_log_sine_range():
    with pytest.raises(DomainError):
        log_sine_series(3, 64)
    with pytest.raises(DomainError):
        log_sine_series(32, 64)


def test_log_sine_weights_match_oracle():
    assert math.fsum(log_sine_weights(300)) == pytest.approx(W(300), rel=1e-14)
    increments = [W(N) for N in (2**8, 2**10, 2**12, 2**14, 2**16)]
    assert all(b > a for a, b in zip(increments, increments[1:]))
    assert 0.55 <= W(2**16) - W(2**8) <= 0.85


def test_log_sine_f_stays_bounded():
    sups = [sup_norm(log_sine_series(N, 2 * (N + 1)).f, 4) for N in (255, 1023, 4095, 16383)]
    assert max(sups) < 2.0
    # grows at most by the (tiny) tail increments
    assert sups[-1] - sups[0] < 0.01


def test_holder_cusp():
    e = holder_cusp(0.75, 4096)
    assert e.exact_conjugate is None and e.antiderivative is None
    assert e.expected_verdict is Verdict.UNIFORM
    for alpha in (0.0, 1.0, 1.5):
        with pytest.raises(DomainError):
            holder_cusp(alpha, 64)


def test_holder_cusp_modulus():
    x = np.linspace(0, 2 * np.pi, 2_000_001)
    exact = np.abs(np.sin(x / 2)) ** 0.75
    step = int(round(0.01 / (x[1] - x[0])))
    oracle = np.max(np.abs(exact[step:] - exact[:-step]))
    assert oracle == pytest.approx(0.005**0.75, rel=0.01)
    value = modulus_of_continuity(holder_cusp(0.75, 4096).f, 0.01)
    assert value == pytest.approx(oracle, rel=0.05)


def test_registry():
    assert corpus_entry("trig_poly", seed=1, degree=3, n=16).name == "trig_poly"
    with pytest.raises(KeyError):
        corpus_entry("weierstrass", n=16)
