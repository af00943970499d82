import numpy as np
import pytest
from hypothesis import strategies as st

from zamansky.core import FourierCoefficients, PeriodicFunction


def poly(cos=(), sin=(), a0=0.0, n=None):
    cos, sin = list(cos), list(sin)
    width = max(len(cos), len(sin))
    cos += [0.0] * (width - len(cos))
    sin += [0.0] * (width - len(sin))
    return PeriodicFunction.from_coefficients(FourierCoefficients(a0, cos, sin), n)


def direct_sum(a0, cos, sin, x):
    """Oracle: plain loop over harmonics."""
    x = np.asarray(x, dtype=float)
    total = np.full(x.shape, a0 / 2.0)
    for k, (a, b) in enumerate(zip(cos, sin), start=1):
        total = total + a * np.cos(k * x) + b * np.sin(k * x)
    return total


coefficient = st.floats(-1.0, 1.0, allow_nan=False)


@st.composite
def trig_polys(draw, max_degree=12, n=64):
    degree = draw(st.integers(1, max_degree))
    cos = draw(st.lists(coefficient, min_size=degree, max_size=degree))
    sin = draw(st.lists(coefficient, min_size=degree, max_size=degree))
    a0 = draw(coefficient)
    return poly(cos, sin, a0, n)


@pytest.fixture
def cos1():
    return poly([1.0], n=64)


def pytest_terminal_summary(terminalreporter):
    import sys

    module = sys.modules.get("test_acceptance")
    if module is None or not module.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in module.RESULTS:
        terminalreporter.write_line(line)
