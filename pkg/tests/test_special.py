"""Gamma, chi, theta, and the Euler-Maclaurin zeta oracle.

Frozen reference values were computed independently at 30 digits
(scripts/gen_oracle_values.py regenerates them).
"""

import cmath
import math

import numpy as np
import pytest

from hardylab.errors import AccuracyError, DomainError, PoleError
from hardylab.special import (chi, gamma_complex, loggamma,
                              riemann_siegel_theta, theta_batch,
                              zeta_euler_maclaurin, zeta_half_batch)

SQRT_PI = 1.7724538509055160273
GAMMA_2P5_3J = complex(-0.21811897108112289748, 0.07203476340717503356)
GAMMA_M1P5_0P5J = complex(0.93791666278788505097, 0.34920566814780486859)
ZETA_2 = 1.6449340668482264365
ZETA_HALF = -1.4603545088095868129
ZETA_HALF_25J = complex(0.0049845933640356753834, -0.014012301962583382963)
CHI_2 = -19.739208802178717238  # = -2*pi^2
THETA_ZERO = 17.845599540410860817


def test_gamma_basic_values():
    assert gamma_complex(1.0) == pytest.approx(1.0, rel=1e-14)
    assert gamma_complex(5.0) == pytest.approx(24.0, rel=1e-14)
    assert gamma_complex(0.5) == pytest.approx(SQRT_PI, rel=1e-12)


def test_gamma_complex_frozen_points():
    assert abs(gamma_complex(2.5 + 3j) - GAMMA_2P5_3J) < 1e-13 * abs(GAMMA_2P5_3J)
    assert abs(gamma_complex(-1.5 + 0.5j) - GAMMA_M1P5_0P5J) \
        < 1e-12 * abs(GAMMA_M1P5_0P5J)


def test_gamma_poles():
    for s in (0.0, -1.0, -7.0):
        with pytest.raises(PoleError):
            gamma_complex(s)


def test_gamma_recurrence_random(rng):
    # Gamma(s+1) = s Gamma(s) on random complex s, |s| <= 100
    for _ in range(300):
        s = complex(rng.uniform(-50, 50), rng.uniform(-80, 80))
        if abs(s.imag) < 0.5 and abs(s - round(s.real)) < 0.1:
            continue
        lhs = gamma_complex(s + 1.0)
        rhs = s * gamma_complex(s)
        assert abs(lhs - rhs) <= 1e-10 * abs(lhs)


def test_loggamma_matches_gamma():
    for z in (3.0 + 0j, 0.7 + 9j, 12.5 - 40j):
        assert abs(cmath.exp(loggamma(z)) - gamma_complex(z)) \
            <= 1e-12 * abs(gamma_complex(z))


def test_chi_fixed_point_half():
    c = chi(0.5 + 0j)
    assert abs(c.value - 1.0) < 1e-14


def test_chi_modulus_on_critical_line():
    c = chi(0.5 + 30j)
    assert abs(abs(c.value) - 1.0) < 1e-12


def test_chi_product_at_2():
    assert abs(chi(2.0 + 0j).value * chi(-1.0 + 0j).value - 1.0) < 1e-10
    assert chi(2.0 + 0j).value.real == pytest.approx(CHI_2, rel=1e-12)


def test_chi_sin_product_form_equivalence():
    # 2^s pi^(s-1) sin(pi s/2) Gamma(1-s) at generic points
    for s in (0.3 + 2j, 0.8 - 5j, 2.5 + 0j, -0.4 + 1j):
        ref = 2.0 ** s * math.pi ** (s - 1) * cmath.sin(math.pi * s / 2.0) \
            * gamma_complex(1.0 - s)
        assert abs(chi(s).value - ref) <= 1e-11 * abs(ref)


def test_chi_log_representation():
    for s in (0.5 + 30j, 0.2 + 100j, 0.9 + 2j, 0.5 - 50j):
        c = chi(s)
        assert abs(c.value - cmath.exp(complex(c.log_abs, c.arg))) \
            <= 1e-12 * abs(c.value)


def test_chi_product_random(rng):
    worst = 0.0
    for _ in range(1000):
        s = complex(rng.uniform(0.1, 0.9), rng.uniform(1.0, 500.0))
        worst = max(worst, abs(chi(s).value * chi(1.0 - s).value - 1.0))
    assert worst <= 1e-9


def test_chi_pole():
    with pytest.raises(PoleError):
        chi(3.0 + 0j)
    with pytest.raises(PoleError):
        chi(1.0 + 0j)


def test_theta_zero_at_origin():
    assert riemann_siegel_theta(0.0) == 0.0


def test_theta_domain():
    with pytest.raises(DomainError):
        riemann_siegel_theta(-1.0)


def test_theta_asymptotic_orders():
    # base 3-term asymptotic misses by ~1/(48 t); adding it leaves < 1e-8
    t = 100.0
    base = 0.5 * t * math.log(0.5 * t / math.pi) - 0.5 * t - math.pi / 8.0
    full = riemann_siegel_theta(t)
    assert abs(full - base) < 2.1e-3
    assert abs(full - base - 1.0 / (48.0 * t)) < 1e-8


def test_theta_first_positive_zero():
    # bisection on the implemented theta
    lo, hi = 17.0, 18.5
    for _ in range(60):
        mid = 0.5 * (lo + hi)
        if riemann_siegel_theta(lo) * riemann_siegel_theta(mid) <= 0:
            hi = mid
        else:
            lo = mid
    assert abs(0.5 * (lo + hi) - THETA_ZERO) < 1e-8


def test_theta_branch_continuity_at_switch():
    # arg-Gamma route below 10 meets the asymptotic branch above
    assert abs(riemann_siegel_theta(9.999999) - riemann_siegel_theta(10.0)) < 1e-5


def test_theta_phase_matches_chi():
    for t in (10.0, 50.0, 1234.5, 1e4):
        c = chi(complex(0.5, t))
        want = cmath.exp(-2j * riemann_siegel_theta(t))
        assert abs(c.value - want) <= 1e-8


def test_theta_batch_matches_scalar():
    ts = np.array([0.5, 3.0, 9.0, 15.0, 120.0])
    vb = theta_batch(ts)
    for t, v in zip(ts, vb):
        assert v == pytest.approx(riemann_siegel_theta(float(t)), abs=1e-12)


def test_zeta_at_2():
    assert zeta_euler_maclaurin(2.0 + 0j).real == pytest.approx(ZETA_2, rel=1e-12)


def test_zeta_at_0():
    # continuation value, reachable already with 2 Bernoulli terms
    assert zeta_euler_maclaurin(0.0 + 0j, n_bernoulli=2).real \
        == pytest.approx(-0.5, abs=1e-12)


def test_zeta_at_half():
    v = zeta_euler_maclaurin(0.5 + 0j, n_terms=60)
    assert v.real == pytest.approx(ZETA_HALF, rel=1e-12)
    assert abs(v.imag) < 1e-14


def test_zeta_complex_frozen():
    v = zeta_euler_maclaurin(0.5 + 25j, extended=True)
    assert abs(v - ZETA_HALF_25J) < 1e-12


def test_zeta_pole():
    with pytest.raises(PoleError):
        zeta_euler_maclaurin(1.0 + 0j)


def test_zeta_accuracy_error_when_underresolved():
    with pytest.raises(AccuracyError):
        zeta_euler_maclaurin(0.5 + 200j, n_terms=8, n_bernoulli=2, tol=1e-10)


def test_zeta_functional_equation_grid(rng):
    worst = 0.0
    for _ in range(40):
        s = complex(rng.uniform(-1.0, 3.0), rng.uniform(2.0, 500.0))
        z1 = zeta_euler_maclaurin(s)
        z2 = zeta_euler_maclaurin(1.0 - s)
        worst = max(worst, abs(z1 - chi(s).value * z2) / abs(z1))
    assert worst <= 1e-8


def test_zeta_half_batch_matches_scalar():
    ts = np.array([0.0, 5.0, 14.1, 77.7, 300.0])
    vb = zeta_half_batch(ts)
    for t, v in zip(ts, vb):
        ref = zeta_euler_maclaurin(complex(0.5, t), extended=True)
        assert abs(v - ref) < 1e-11
