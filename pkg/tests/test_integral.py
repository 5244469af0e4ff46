"""The weighted critical-line integral I(T) and its decay machinery.

The independent oracle is a singularity-subtracted trapezoid rule: the
smooth part log|Z(t)/prod(t-gamma)| on a dense grid plus closed-form
pieces for each log|t-gamma| factor against the Cauchy weight.
"""

import math

import numpy as np
import pytest
from scipy.integrate import quad

from bsylab import errors
from bsylab.config import DEFAULT, PrecisionConfig
from bsylab.integral import (
    MODELS,
    ScanReport,
    bsy_integrand,
    compute_I,
    compute_I_many,
    fit_decay,
    tail_I,
    theorem2_residual,
    weight_identity_check,
    zero_sum_term,
)
from bsylab.zeros import ZeroCandidate
from bsylab.zeta import hardy_z_batch, log_abs_zeta_half


def _trapezoid_oracle(a: float, b: float, zl, n: int = 200_001) -> float:
    """Dense singularity-subtracted trapezoid for the weighted integral."""
    ts = np.linspace(a, b, n)
    gs = zl.ordinates[(zl.ordinates > a - 2) & (zl.ordinates < b + 2)]
    zs = np.abs(hardy_z_batch(ts, 1e-10, DEFAULT)[0])
    smooth = np.log(zs)
    for g in gs:
        smooth -= np.log(np.abs(ts - g))
    w = 1.0 / (0.25 + ts ** 2)
    total = np.trapezoid(smooth * w, ts)
    for g in gs:
        lo, hi = max(a, g - 50.0), min(b, g + 50.0)
        total += quad(lambda t: math.log(abs(t - g)) / (0.25 + t * t),
                      lo, hi, points=[g], limit=400, epsabs=1e-12)[0]
    return total


def test_compute_I_against_trapezoid_oracle(zeros_100):
    res = compute_I(40.0, zeros_100, DEFAULT)
    oracle = 2.0 * _trapezoid_oracle(0.0, 40.0, zeros_100)
    assert abs(res.value - oracle) < 5e-8
    # counts refer to the half-range [0, T] profile
    assert res.singularities_handled == np.count_nonzero(
        zeros_100.ordinates <= 40.0)


def test_integrand_even_and_smooth_point():
    t = 33.3
    expect = log_abs_zeta_half(t, DEFAULT) / (0.25 + t * t)
    assert bsy_integrand(t, DEFAULT) == pytest.approx(expect, rel=1e-12)
    assert bsy_integrand(-t, DEFAULT) == pytest.approx(expect, rel=1e-12)


def test_compute_I_many_telescopes(zeros_100):
    Ts = np.array([10.0, 20.0, 40.0, 80.0])
    many = compute_I_many(Ts, zeros_100, DEFAULT)
    for T, r in zip(Ts, many):
        single = compute_I(float(T), zeros_100, DEFAULT)
        assert abs(r.value - single.value) < 1e-11


def test_tail_identity(zeros_100):
    # I(T2) = I(T1) - 2 * integral over [T1, T2]; tail_I returns the
    # signed difference I-contribution of [T1, T2]
    i1 = compute_I(30.0, zeros_100, DEFAULT).value
    i2 = compute_I(90.0, zeros_100, DEFAULT).value
    t = tail_I(30.0, 90.0, zeros_100, DEFAULT).value
    assert abs((i1 - i2) - t) < 1e-11


def test_zero_list_insufficient(zeros_100):
    with pytest.raises(errors.ZeroListInsufficient):
        compute_I(5000.0, zeros_100, DEFAULT)


def test_zero_sum_term_closed_form():
    # log|rho/(1-rho)| for rho = beta + i gamma
    beta, gamma = 0.75, 100.0
    truth = 0.5 * math.log((beta ** 2 + gamma ** 2)
                           / ((1 - beta) ** 2 + gamma ** 2))
    assert zero_sum_term(ZeroCandidate(beta, gamma)) \
        == pytest.approx(truth, rel=1e-13)
    assert zero_sum_term((beta, gamma)) == pytest.approx(truth, rel=1e-13)


def test_zero_sum_term_tiny_offsets():
    assert zero_sum_term(ZeroCandidate(0.5 + 1e-9, 50.0)) <= 1e-8
    assert zero_sum_term(ZeroCandidate(0.5 + 1e-9, 50.0)) > 0
    with pytest.raises(errors.BetaOutOfRange):
        ZeroCandidate(0.5, 50.0)


def test_theorem2_residual_shift(zeros_100):
    cand = ZeroCandidate(0.8, 33.3)
    base, base_n = theorem2_residual(90.0, [], zeros_100, DEFAULT)
    shifted, _ = theorem2_residual(90.0, [cand], zeros_100, DEFAULT)
    expect = 2.0 * math.pi * zero_sum_term(cand)
    assert abs((base - shifted) - expect) <= 1e-12 * abs(expect)
    # out-of-window hypotheticals are ignored
    far, _ = theorem2_residual(90.0, [ZeroCandidate(0.8, 95.0)],
                               zeros_100, DEFAULT)
    assert far == base
    assert base_n == pytest.approx(base * 90.0 ** 2 / math.log(90.0))


def test_weight_identity_small():
    # 2 * integral over [0, X] of log sqrt(1/4+t^2) / (1/4+t^2) -> 0
    for X in (100.0, 1000.0):
        assert abs(weight_identity_check(X, DEFAULT)) \
            <= 4.0 * (1.0 + math.log(X)) / X


def test_fit_decay_recovers_planted_power():
    Ts = np.geomspace(10.0, 5000.0, 12)
    samples = np.column_stack([Ts, 3.7 * Ts ** -2.13])
    fit = fit_decay(samples, "pure_power")
    assert fit.model == "pure_power"
    assert fit.fitted_params[1] == pytest.approx(2.13, abs=1e-9)
    assert fit.residual_rms < 1e-9


def test_fit_decay_shaped_models():
    Ts = np.geomspace(10.0, 5000.0, 12)
    planted = 2.5 * np.log(Ts) / Ts ** 2
    fit = fit_decay(np.column_stack([Ts, planted]), "logT_over_T2")
    assert fit.fitted_params[0] == pytest.approx(2.5, rel=1e-6)
    assert fit.residual_rms < 1e-9
    worse = fit_decay(np.column_stack([Ts, planted]), "sqrtlog_T2")
    assert worse.residual_rms > fit.residual_rms


def test_fit_decay_flags_sign_changes():
    Ts = np.geomspace(10.0, 5000.0, 12)
    vals = 3.7 * Ts ** -2.0
    vals[5] *= -1.0
    fit = fit_decay(np.column_stack([Ts, vals]), "pure_power")
    assert any(f.startswith("sign_change_in_window") for f in fit.flags)


def test_fit_decay_degenerate():
    Ts = np.geomspace(10.0, 20.0, 9)
    with pytest.raises(errors.DegenerateFit):
        fit_decay(np.column_stack([Ts, Ts ** -2.0]), "pure_power")
    with pytest.raises(errors.DegenerateFit):
        fit_decay(np.column_stack([Ts[:4], Ts[:4] ** -2.0]), "pure_power")


def test_scan_report_validation():
    good = np.array([[1.0, 0.1], [2.0, 0.05]])
    ScanReport(good, "none", np.array([]), 0.0)
    with pytest.raises(ValueError):
        ScanReport(good[::-1], "none", np.array([]), 0.0)
    with pytest.raises(ValueError):
        ScanReport(good, "bogus", np.array([]), 0.0)
    assert set(MODELS) == {"pure_power", "logT_over_T2", "sqrtlog_T2"}


def test_refinement_stays_within_bound(zeros_100):
    coarse = compute_I(60.0, zeros_100, DEFAULT)
    fine = compute_I(60.0, zeros_100, DEFAULT.refined(10.0))
    assert abs(coarse.value - fine.value) <= max(coarse.abs_error_est, 1e-12)
