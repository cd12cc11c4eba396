"""Z evaluation: Riemann-Siegel fast path against the Euler-Maclaurin oracle."""

import math

import numpy as np
import pytest

from hardylab.errors import DomainError
from hardylab.hardy import (z_breakpoints, z_eval_many, z_oracle,
                            z_oracle_many, z_rs, z_rs_many, _RS_ERR_C)

ZETA_HALF = -1.4603545088095868129
FIRST_ZERO = 14.134725141734693790
Z_10 = -1.5491945461810223891   # frozen 30-digit reference
Z_100 = 2.6926970566644634750


def test_oracle_at_origin():
    assert z_oracle(0.0) == pytest.approx(ZETA_HALF, rel=1e-12)


def test_oracle_frozen_values():
    assert z_oracle(10.0) == pytest.approx(Z_10, rel=1e-12)
    assert z_oracle(100.0) == pytest.approx(Z_100, rel=1e-12)


def test_oracle_modulus_identity():
    # |Z(t)| = |zeta(1/2+it)|
    from hardylab.special import zeta_euler_maclaurin
    z = z_oracle(10.0)
    zeta = zeta_euler_maclaurin(0.5 + 10j, extended=True)
    assert abs(abs(z) - abs(zeta)) < 1e-9


def test_oracle_single_sign_before_first_zero():
    ts = np.arange(0.0, 14.0, 0.25)
    vals = z_oracle_many(ts)
    assert np.all(vals < 0.0)


def test_evenness_via_conjugation():
    # Z(-t) = Z(t): via theta(-t) = -theta(t) the product conjugates, so
    # the real part is unchanged; check through the modulus identity
    from hardylab.special import zeta_euler_maclaurin
    for t in (5.0, 25.0):
        z_pos = z_oracle(t)
        zeta_neg = zeta_euler_maclaurin(complex(0.5, -t), extended=True)
        assert abs(abs(z_pos) - abs(zeta_neg)) < 1e-10


def test_rs_domain():
    with pytest.raises(DomainError):
        z_rs(9.0)
    with pytest.raises(DomainError):
        z_rs_many(np.array([50.0]), corrections=5)


def test_rs_first_zero():
    assert abs(z_rs(FIRST_ZERO, 3).value) < 1e-3


def test_rs_matches_oracle_at_100():
    assert abs(z_rs(100.0, 2).value - z_oracle(100.0)) < 5e-4


def test_rs_corrections_shrink_error():
    t = 1000.0
    ref = z_oracle(t)
    e0 = abs(z_rs(t, 0).value - ref)
    e2 = abs(z_rs(t, 2).value - ref)
    assert e0 / e2 >= 10.0


def test_rs_agreement_law_and_slope():
    ts = np.array([50.0, 100.0, 500.0, 1000.0, 5000.0])
    errs = np.abs(z_rs_many(ts, 3) - z_oracle_many(ts))
    assert errs.max() <= 1e-3
    slope = np.polyfit(np.log(ts), np.log(np.maximum(errs, 1e-300)), 1)[0]
    assert slope <= -1.8


def test_rs_err_est_bounds_true_error():
    for t in (50.0, 200.0, 1234.0):
        ref = z_oracle(t)
        for k in range(5):
            s = z_rs(t, k)
            assert abs(s.value - ref) <= s.err_est + 1e-9
            assert s.err_est == pytest.approx(
                _RS_ERR_C[k] * t ** (-(2 * k + 3) / 4.0))
            assert s.main_terms == int(math.floor(math.sqrt(t / (2 * math.pi))))


def test_zero_correspondence_on_10_200():
    # sign changes of the fast path match the oracle's within 1e-2
    ts = np.arange(10.0, 200.0, 5e-3)
    rs = z_rs_many(ts, 3)
    oracle = z_oracle_many(ts)
    z_rs_pos = ts[np.nonzero(np.sign(rs[1:]) * np.sign(rs[:-1]) < 0)[0]]
    z_or_pos = ts[np.nonzero(np.sign(oracle[1:]) * np.sign(oracle[:-1]) < 0)[0]]
    assert len(z_rs_pos) == len(z_or_pos)
    assert np.max(np.abs(z_rs_pos - z_or_pos)) <= 1e-2


def test_breakpoints():
    bps = z_breakpoints(1.0, 200.0)
    assert 10.0 in bps
    two_pi = 2.0 * math.pi
    for n in (2, 3, 4, 5):
        assert any(abs(b - two_pi * n * n) < 1e-12 for b in bps)


def test_eval_many_switches_at_10():
    ts = np.array([2.0, 9.5, 10.5, 60.0])
    vals = z_eval_many(ts)
    assert vals[0] == pytest.approx(z_oracle(2.0))
    assert vals[3] == pytest.approx(z_rs(60.0, 3).value)
