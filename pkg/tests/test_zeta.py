"""Zeta engine tests against independent oracles.

mpmath is used strictly as an oracle (never inside the package); the
eta-series and Bernoulli identities provide library-free cross-checks.
"""

import math

import mpmath
import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from bsylab import errors
from bsylab.config import DEFAULT, PrecisionConfig
from bsylab.zeta import (
    hardy_z,
    hardy_z_batch,
    log_abs_zeta_half,
    log_zeta_branch,
    rs_error_bound,
    rs_theta,
    rs_theta_array,
    rs_theta_error_bound,
    zeta_em,
)

mpmath.mp.dps = 30


def _mp_zeta(s: complex) -> complex:
    return complex(mpmath.zeta(mpmath.mpc(s.real, s.imag)))


def _eta_zeta_half(terms: int = 200_000) -> float:
    """zeta(1/2) from the alternating eta series with Euler averaging."""
    n = np.arange(1, terms + 1, dtype=float)
    partial = np.cumsum((-1.0) ** (n + 1) / np.sqrt(n))
    # repeated averaging of the tail accelerates the alternating series
    tail = partial[-40:]
    for _ in range(30):
        tail = 0.5 * (tail[1:] + tail[:-1])
    return float(tail[-1]) / (1.0 - 2.0 ** 0.5)


def test_basel_point():
    zv = zeta_em(2.0, DEFAULT)
    assert abs(complex(zv) - math.pi ** 2 / 6) <= 1e-10
    assert abs(complex(zv) - math.pi ** 2 / 6) <= zv.abs_error


def test_zeta_half_eta_series_oracle():
    zv = zeta_em(0.5, DEFAULT)
    oracle = _eta_zeta_half()
    assert abs(oracle - (-1.4603545088095868)) < 1e-9   # series sanity
    assert abs(complex(zv).real - oracle) < 1e-9
    assert abs(complex(zv).imag) < 1e-12


@pytest.mark.parametrize("s", [
    complex(0.5, 14.0), complex(0.5, 99.7), complex(0.5, 1013.3),
    complex(0.75, 250.1), complex(2.0, 50.0), complex(1.5, 0.0),
    complex(0.6, 9999.5), complex(0.5, 31.7),
])
def test_em_matches_mpmath_within_bound(s):
    zv = zeta_em(s, DEFAULT)
    ref = _mp_zeta(s)
    assert abs(complex(zv) - ref) <= zv.abs_error
    assert abs(complex(zv) - ref) <= 1e-10 * max(1.0, abs(ref))


def test_em_error_bound_conservative_under_refinement():
    # refining must never move the value outside the earlier bound
    for s in (complex(0.5, 77.7), complex(0.8, 313.1)):
        coarse = zeta_em(s, DEFAULT)
        fine = zeta_em(s, DEFAULT.refined(10.0))
        assert abs(complex(coarse) - complex(fine)) <= coarse.abs_error


def test_pole_guard():
    with pytest.raises(errors.PoleAt1):
        zeta_em(complex(1.0, 1e-6), DEFAULT)


def test_theta_against_loggamma_oracle():
    for t in (10.0, 50.0, 444.4, 1e4, 2e5):
        oracle = float(mpmath.im(mpmath.loggamma(0.25 + 0.5j * t))
                       - 0.5 * t * mpmath.log(mpmath.pi))
        assert abs(rs_theta(t) - oracle) <= max(rs_theta_error_bound(t),
                                                1e-11 * max(1.0, abs(oracle)))


def test_theta_array_matches_scalar():
    ts = np.array([15.0, 100.0, 987.6])
    arr = rs_theta_array(ts)
    for t, v in zip(ts, arr):
        assert v == rs_theta(float(t))


@pytest.mark.parametrize("t", [35.0, 101.5, 999.9, 12345.6, 150000.0])
def test_hardy_z_matches_mpmath(t):
    zv = hardy_z(t, DEFAULT)
    oracle = float(mpmath.siegelz(t))
    assert abs(float(zv) - oracle) <= max(zv.abs_error, 5e-11)


def test_rs_error_bound_conservative():
    # the fitted correction-term coefficients must over-cover reality
    cfg = PrecisionConfig(target_abs_error=1e-6, quad_tol=1e-3,
                          rs_correction_terms=2)
    ts = np.geomspace(35.0, 2e5, 60)
    vals, bounds = hardy_z_batch(ts, 1e-3, cfg)
    for t, v, b in zip(ts, vals, bounds):
        assert abs(v - float(mpmath.siegelz(float(t)))) <= b


def test_hardy_z_batch_agrees_with_em():
    ts = np.linspace(31.0, 4000.0, 400)
    vals, bounds = hardy_z_batch(ts, 1e-8, DEFAULT)
    for t, v, b in zip(ts[::37], vals[::37], bounds[::37]):
        em = zeta_em(complex(0.5, t), DEFAULT)
        assert abs(abs(v) - abs(complex(em))) <= b + em.abs_error


def test_log_abs_and_branch_consistency():
    for t in (21.0, 143.111, 5005.5):
        direct = log_abs_zeta_half(t, DEFAULT)
        branch = log_zeta_branch(0.5, t, DEFAULT)
        assert abs(direct - branch.real) < 1e-10
        oracle = complex(mpmath.log(mpmath.zeta(0.5 + 1j * t)))
        assert abs(direct - oracle.real) < 1e-10


def test_log_zeta_branch_winding_oracle():
    # mpmath's principal log can differ by 2 pi k; the continuous branch
    # must make S(t) = Im/pi consistent with the counting formula
    t = 100.0
    br = log_zeta_branch(0.5, t, DEFAULT)
    s = br.imag / math.pi
    n = round(rs_theta(t) / math.pi + 1.0 + s)
    assert n == 29


@settings(max_examples=25, deadline=None)
@given(st.floats(min_value=12.0, max_value=3000.0),
       st.floats(min_value=0.5, max_value=2.5))
def test_conjugate_symmetry(t, sigma):
    plus = complex(zeta_em(complex(sigma, t), DEFAULT))
    minus = complex(zeta_em(complex(sigma, -t), DEFAULT))
    assert abs(plus.conjugate() - minus) <= 1e-11 * max(1.0, abs(plus))


@settings(max_examples=15, deadline=None)
@given(st.floats(min_value=31.0, max_value=50_000.0))
def test_z_is_real_and_bound_positive(t):
    zv = hardy_z(t, DEFAULT)
    assert np.isreal(float(zv))
    assert zv.abs_error > 0
    assert rs_error_bound(np.array([t]), 2)[0] > 0
