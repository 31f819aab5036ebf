import math

import numpy as np
import pytest

from lommelint.quadrature import adaptive_gk15, gk15


def test_gk15_exact_for_polynomials():
    val, err = gk15(lambda x: x**20 - 3 * x**7 + 1, 0.0, 1.0)
    assert val == pytest.approx(1 / 21 - 3 / 8 + 1, rel=1e-15)
    assert err >= 0.0


def test_gk15_returns_python_float_error():
    _, err = gk15(np.sin, 0.0, 1.0)
    assert type(err) is float


@pytest.mark.parametrize(
    "f,a,b,exact",
    [
        (np.exp, 0.0, 5.0, math.exp(5) - 1),
        (np.sqrt, 0.0, 1.0, 2 / 3),
        (lambda x: 1 / (1 + x * x), 0.0, 50.0, math.atan(50.0)),
        (lambda x: 2 + np.cos(30 * x), 0.0, 2.0, 4 + math.sin(60) / 30),
    ],
)
def test_adaptive_reaches_tolerance(f, a, b, exact):
    val, err, n, ok = adaptive_gk15(f, a, b, rel_tol=1e-13)
    assert ok
    assert val == pytest.approx(exact, rel=1e-12)
    assert n % 15 == 0


def test_adaptive_reports_non_convergence():
    val, err, n, ok = adaptive_gk15(lambda x: np.sign(x - 0.3), 0.0, 1.0, rel_tol=1e-15, max_panels=20)
    assert not ok
    assert val == pytest.approx(0.4, abs=1e-2)
