import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from scipy.integrate import quad

from zetacount.quad import QuadratureError, integral_linear, integrate, integrate_adaptive
from zetacount.specfn import zeta_real


@settings(max_examples=200)
@given(st.floats(-5, 5), st.floats(-5, 5), st.floats(0, math.pi), st.floats(0, math.pi),
       st.floats(0.5, 2), st.floats(0.1, 2))
def test_integral_linear_closed_form(a, b, lo, hi, c, r):
    ref, _ = quad(lambda t: a + b * (c + r * math.cos(t)), lo, hi, epsabs=1e-13)
    assert integral_linear(a, b, lo, hi, c, r) == pytest.approx(ref, abs=1e-11)


@pytest.mark.parametrize("f, lo, hi, exact", [
    (math.sin, 0.0, math.pi, 2.0),
    (math.exp, -1.0, 2.0, math.exp(2) - math.exp(-1)),
    (lambda x: 1 / math.sqrt(x), 0.0, 1.0, 2.0),
    (lambda x: math.log(x), 0.0, 1.0, -1.0),
    (lambda x: x ** 7 - 3 * x, -2.0, 3.0, (3 ** 8 - 2 ** 8) / 8 - 1.5 * (9 - 4)),
])
def test_adaptive_against_exact(f, lo, hi, exact):
    value, err = integrate_adaptive(f, lo, hi)
    assert value == pytest.approx(exact, abs=1e-10)
    assert err <= 1e-11


def test_adaptive_against_scipy_on_log_zeta():
    c, r = 1.025253504, 1.182375395
    th = math.acos((1.01 - c) / r)
    f = lambda t: math.log(zeta_real(c + r * math.cos(t)))  # noqa: E731
    ref, _ = quad(f, 0.0, th, epsabs=1e-13, limit=200)
    assert integrate(f, 0.0, th) == pytest.approx(ref, abs=1e-10)


def test_orientation_and_empty_interval():
    assert integrate(math.cos, 1.0, 0.0) == pytest.approx(-math.sin(1.0), abs=1e-13)
    assert integrate_adaptive(math.cos, 0.3, 0.3) == (0.0, 0.0)


def test_deterministic():
    f = lambda x: math.sqrt(abs(math.sin(7 * x)))  # noqa: E731
    assert integrate_adaptive(f, 0, 3, abs_tol=1e-8) == integrate_adaptive(f, 0, 3, abs_tol=1e-8)


def test_tolerance_floor():
    with pytest.raises(ValueError):
        integrate_adaptive(math.sin, 0, 1, abs_tol=1e-15)


def test_interval_limit_reports_best_estimate():
    f = lambda x: math.sin(1 / x) / x  # noqa: E731
    with pytest.raises(QuadratureError) as info:
        integrate_adaptive(f, 1e-6, 1.0, abs_tol=1e-13, max_intervals=20)
    assert math.isfinite(info.value.estimate)
    assert info.value.error > 1e-13
