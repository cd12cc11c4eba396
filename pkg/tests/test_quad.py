"""Adaptive oscillatory quadrature and vertical-line contour integrals."""

import math

import numpy as np
import pytest

from hardylab.errors import BudgetError, DomainError
from hardylab.hardy import z_eval_many
from hardylab.moments import z_power_freq
from hardylab.quad import (QuadratureResult, integrate_oscillatory,
                           integrate_vertical_line)


def test_cosine_full_period():
    r = integrate_oscillatory(np.cos, 0.0, 2.0 * math.pi,
                              lambda t: 1.0 / (2.0 * math.pi), tol=1e-12)
    assert abs(r.value) <= 1e-12
    assert r.evals >= r.panels * 16


def test_constant():
    r = integrate_oscillatory(lambda x: np.ones_like(x), 1.0, 3.0,
                              lambda t: 0.0, tol=1e-14)
    assert abs(r.value - 2.0) <= 1e-14


def test_z_self_consistency_on_0_100():
    # whole-interval result vs independently summed sub-intervals at half
    # tolerance
    freq = z_power_freq(1)
    f = lambda t: z_eval_many(t)
    whole = integrate_oscillatory(f, 1.0, 100.0, freq, tol=1e-8,
                                  breakpoints=(10.0,))
    parts = 0.0
    err = 0.0
    for a, b in ((1.0, 30.0), (30.0, 61.5), (61.5, 100.0)):
        r = integrate_oscillatory(f, a, b, freq, tol=5e-9,
                                  breakpoints=(10.0,))
        parts += r.value.real
        err += r.abs_err_est
    assert abs(whole.value.real - parts) <= whole.abs_err_est + err + 1e-9


def test_tolerance_monotonicity():
    f = lambda x: np.sin(3.0 * x) * np.exp(-0.1 * x)
    exact = integrate_oscillatory(f, 0.0, 20.0, lambda t: 0.5, tol=1e-13).value
    prev_gap = None
    for tol in (1e-4, 1e-6, 1e-8, 1e-10):
        v = integrate_oscillatory(f, 0.0, 20.0, lambda t: 0.5, tol=tol).value
        gap = abs(v - exact)
        if prev_gap is not None:
            assert gap <= prev_gap + 1e-14
        prev_gap = gap


def test_determinism_repeat_calls():
    f = lambda t: z_eval_many(t)
    r1 = integrate_oscillatory(f, 10.0, 80.0, z_power_freq(1), tol=1e-9)
    r2 = integrate_oscillatory(f, 10.0, 80.0, z_power_freq(1), tol=1e-9)
    assert r1.value == r2.value and r1.abs_err_est == r2.abs_err_est


def test_budget_error_carries_partial():
    # deliberately unhinted fast oscillation: refinement must exceed the cap
    f = lambda x: np.cos(50.0 * x)
    with pytest.raises(BudgetError) as exc:
        integrate_oscillatory(f, 0.0, 100.0, lambda t: 0.0, tol=1e-12,
                              budget=2000)
    assert isinstance(exc.value.result, QuadratureResult)


def test_domain():
    with pytest.raises(DomainError):
        integrate_oscillatory(np.cos, 1.0, 1.0, lambda t: 1.0)


def test_vertical_line_constant():
    r = integrate_vertical_line(lambda s: np.ones_like(s), 2.0, 0.0, 1.0,
                                tol=1e-12)
    assert abs(r.value - 1.0 / (2.0 * math.pi)) <= 1e-12


def test_vertical_line_perron():
    # x^s / s at x = 2 approaches 1 as the contour grows
    r = integrate_vertical_line(lambda s: 2.0 ** s / s, 2.0, -200.0, 200.0,
                                tol=1e-8,
                                freq=lambda t: math.log(2.0) / (2 * math.pi))
    assert abs(r.value - 1.0) <= 1e-2


def test_vertical_line_gamma_stability():
    from hardylab.special import gamma_complex

    def F(s):
        return np.array([gamma_complex(complex(w)) for w in s])

    r1 = integrate_vertical_line(F, 0.5, -30.0, 30.0, tol=1e-8)
    r2 = integrate_vertical_line(F, 0.5, -30.0, 30.0, tol=5e-9)
    assert abs(r1.value - r2.value) <= r1.abs_err_est + r2.abs_err_est + 1e-12


@pytest.mark.parametrize("sigma,T,a,b", [
    (1.0, 50.0, 10.0, 200.0),
    (1.5, 30.0, 10.0, 120.0),
    (2.0, 80.0, 15.0, 90.0),
])
def test_mean_square_transform_inequality(sigma, T, a, b):
    # int_0^T |int_a^b g(x) x^{-sigma-it} dx|^2 dt
    #   <= 2 pi int_a^b g(x)^2 x^{1-2 sigma} dx  for real integrable g
    freq_x = z_power_freq(1)
    gx = lambda x: z_eval_many(x)

    def inner(t: float) -> complex:
        f = lambda x: gx(x) * np.exp(-complex(sigma, t) * np.log(x))
        return integrate_oscillatory(
            f, a, b, lambda x: freq_x(x) + abs(t) / (2 * math.pi * x),
            tol=1e-8).value

    def outer(ts: np.ndarray) -> np.ndarray:
        return np.array([abs(inner(float(t))) ** 2 for t in ts])

    lhs = integrate_oscillatory(outer, 0.0, T, lambda t: 0.0, tol=1e-6,
                                max_panel=2.0)
    rhs = integrate_oscillatory(
        lambda x: gx(x) ** 2 * x ** (1.0 - 2.0 * sigma), a, b, freq_x,
        tol=1e-9)
    bound = 2.0 * math.pi * rhs.value.real \
        + 2.0 * math.pi * rhs.abs_err_est + lhs.abs_err_est
    assert lhs.value.real <= bound
