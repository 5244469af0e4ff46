"""Zeta-function engines on the critical strip.

Two independent evaluation routes are provided and cross-checked by the
test suite:

* Euler-Maclaurin summation (``zeta_em``), valid on sigma >= -1 with a
  computable remainder bound; the accuracy workhorse.
* The Riemann-Siegel main sum with up to four correction terms
  (``hardy_z`` fast path), O(sqrt(t)) per point and vectorized, used for
  long scans.  Correction functions C0..C3 are evaluated from Chebyshev
  tables frozen in :mod:`bsylab._rs_coeffs`.

Phase-critical reductions accumulate in longdouble; everything else is
compensated float64.
"""

import math
from dataclasses import dataclass

import numpy as np
from scipy.special import loggamma

from . import errors
from ._rs_coeffs import C0_CHEB, C1_CHEB, C2_CHEB, C3_CHEB
from .config import DEFAULT, POLE_THRESHOLD, PrecisionConfig

TWO_PI = 2.0 * math.pi

#: Validity threshold of the theta asymptotic expansion.
THETA_T_MIN = 10.0

#: Below this height the Riemann-Siegel path is not used.
RS_T_MIN = 30.0

#: Empirical absolute-error coefficients for the RS path with k
#: correction terms: |error| <= RS_BOUND_COEF[k] * t**(-(2k+1)/4)
#: plus a small floating-point floor.  Calibrated on 460 points in
#: t in [30, 2e5] against a 25-digit reference with a ~3x margin
#: (see tests/test_zeta.py::test_rs_error_bound_conservative).
RS_BOUND_COEF = (4.5, 0.4, 0.16, 0.03, 0.6)


@dataclass(frozen=True)
class ComplexPoint:
    """A point s = sigma + i t of the critical strip."""

    sigma: float
    t: float

    def __post_init__(self):
        if not (math.isfinite(self.sigma) and math.isfinite(self.t)):
            raise ValueError("ComplexPoint must be finite")

    @property
    def s(self) -> complex:
        return complex(self.sigma, self.t)


@dataclass(frozen=True)
class ZetaValue:
    """An evaluation together with a conservative absolute error bound."""

    value: complex
    abs_error: float

    def __complex__(self) -> complex:
        return complex(self.value)

    def __float__(self) -> float:
        return float(self.value.real)


# ----------------------------------------------------------------------
# Bernoulli-derived constants
# ----------------------------------------------------------------------

def _b2k_over_fact(kmax: int) -> np.ndarray:
    """B_{2k}/(2k)! for k = 0..kmax via 2(-1)^(k+1) zeta(2k)/(2pi)^(2k)."""
    from scipy.special import zeta as _rzeta
    out = np.empty(kmax + 1)
    out[0] = 1.0
    for k in range(1, kmax + 1):
        out[k] = (-1.0) ** (k + 1) * 2.0 * float(_rzeta(2 * k)) \
            / TWO_PI ** (2 * k)
    return out


_B2K_OVER_FACT = _b2k_over_fact(32)

# theta series coefficients: (1 - 2^(1-2n)) |B_2n| / (4n (2n-1)), n>=1
_THETA_N = 8


def _theta_coeffs() -> np.ndarray:
    fact = 1.0
    coeffs = []
    for n in range(1, _THETA_N + 2):
        fact *= (2 * n) * (2 * n - 1)
        b2n = abs(_B2K_OVER_FACT[n]) * fact
        coeffs.append((1.0 - 2.0 ** (1 - 2 * n)) * b2n / (4 * n * (2 * n - 1)))
    return np.array(coeffs)


_THETA_C = _theta_coeffs()


# ----------------------------------------------------------------------
# Riemann-Siegel theta
# ----------------------------------------------------------------------

def rs_theta_array(ts: np.ndarray) -> np.ndarray:
    """theta(t) for |t| >= THETA_T_MIN, odd in t, vectorized."""
    ts = np.asarray(ts, dtype=float)
    a = np.abs(ts)
    if np.any(a < THETA_T_MIN):
        raise errors.DomainTooSmall(
            f"rs_theta requires |t| >= {THETA_T_MIN}")
    val = 0.5 * a * np.log(a / TWO_PI) - 0.5 * a - math.pi / 8
    for n in range(1, _THETA_N + 1):
        val += _THETA_C[n - 1] * a ** (1 - 2 * n)
    return np.sign(ts) * val


def _rs_theta_ld(ts: np.ndarray) -> np.ndarray:
    """theta(t) in 80-bit floats for t >= THETA_T_MIN (phase use)."""
    a = np.abs(ts).astype(np.longdouble)
    two_pi_ld = 2 * np.arccos(np.longdouble(-1.0))
    val = 0.5 * a * np.log(a / two_pi_ld) - 0.5 * a \
        - np.arccos(np.longdouble(-1.0)) / 8
    for n in range(1, _THETA_N + 1):
        val += np.longdouble(_THETA_C[n - 1]) * a ** (1 - 2 * n)
    return np.sign(ts).astype(np.longdouble) * val


def rs_theta(t: float) -> float:
    """Riemann-Siegel theta via its asymptotic expansion (|t| >= 10)."""
    return float(rs_theta_array(np.array([t]))[0])


def rs_theta_error_bound(t: float) -> float:
    """First omitted term of the theta expansion."""
    return float(_THETA_C[_THETA_N] * abs(t) ** (-1 - 2 * _THETA_N))


def _theta_smallt(ts: np.ndarray) -> np.ndarray:
    """theta(t) from log-gamma directly; any t, slower."""
    ts = np.asarray(ts, dtype=float)
    z = loggamma(0.25 + 0.5j * ts)
    return z.imag - 0.5 * ts * math.log(math.pi)


def _theta_any(ts: np.ndarray) -> np.ndarray:
    ts = np.asarray(ts, dtype=float)
    out = np.empty_like(ts)
    big = np.abs(ts) >= THETA_T_MIN
    if np.any(big):
        out[big] = rs_theta_array(ts[big])
    if np.any(~big):
        out[~big] = _theta_smallt(ts[~big])
    return out


# ----------------------------------------------------------------------
# Euler-Maclaurin
# ----------------------------------------------------------------------

_EM_CHUNK = 4_000_000  # max elements of the (points x terms) phase matrix


def _em_remainder_bound(sigma: float, tmax: float, M: int, K: int) -> float:
    """Standard remainder bound: |(s+2K+1)/(sigma+2K+1)| * |next term|."""
    s_abs = math.hypot(sigma, tmax)
    poch = 1.0
    for j in range(2 * K + 1):
        poch *= math.hypot(sigma + j, tmax)
    nxt = abs(_B2K_OVER_FACT[K + 1]) * poch * M ** (-(sigma + 2 * K + 1))
    return nxt * (s_abs + 2 * K + 1) / (sigma + 2 * K + 1)


def _em_choose_M(sigma: float, tmax: float, cfg: PrecisionConfig,
                 target: float) -> int:
    K = cfg.euler_maclaurin_terms
    M = max(24, int(0.35 * tmax) + 2 * K)
    for _ in range(12):
        if _em_remainder_bound(sigma, tmax, M, K) <= target:
            return M
        M = int(M * 1.4) + 8
    raise errors.PrecisionUnreachable(
        f"Euler-Maclaurin cannot reach {target} at sigma={sigma}, "
        f"t={tmax} with {K} correction terms")


def _em_roundoff(tmax: float, M: int, amp_sum: float,
                 longdouble_phase: bool = True) -> float:
    """Floating-point floor of the truncated-sum evaluation.

    With longdouble phases, t*log(n) is reduced mod 2*pi in 80-bit floats
    (unit roundoff ~1.1e-19), so each term carries an absolute phase error
    of order t*log(M)*1e-19.  With plain float64 phases the per-term phase
    error grows to t*log(M)*1.2e-16.  Either way the amplitude-weighted
    total plus double-precision accumulation noise gives the floor below.
    """
    lnM = math.log(M + 2.0)
    coeff = 1.5e-18 if longdouble_phase else 1.2e-16
    return coeff * (1.0 + tmax) * lnM * amp_sum + 1.5e-15 * amp_sum


def _em_batch(sigma: float, ts: np.ndarray, cfg: PrecisionConfig = DEFAULT,
              target: float | None = None,
              longdouble_phase: bool = True) -> tuple[np.ndarray, np.ndarray]:
    """zeta(sigma + i t) for an array of non-negative t, with error bounds.

    All points share one truncation M chosen from max(ts); callers should
    chunk wildly different heights separately.
    """
    ts = np.asarray(ts, dtype=float)
    if target is None:
        target = cfg.target_abs_error
    tmax = float(np.max(ts)) if ts.size else 0.0
    K = cfg.euler_maclaurin_terms
    M = _em_choose_M(sigma, tmax, cfg, target)

    n = np.arange(1, M, dtype=float)
    lnn_ld = np.log(n.astype(np.longdouble))
    lnn = lnn_ld.astype(float)
    amp = n ** (-sigma)
    vals = np.zeros(ts.shape, dtype=complex)
    step = max(1, _EM_CHUNK // max(M, 1))
    for i in range(0, ts.size, step):
        sl = slice(i, min(i + step, ts.size))
        if longdouble_phase:
            ph = (ts[sl].astype(np.longdouble)[:, None]
                  * lnn_ld[None, :]) % np.longdouble(TWO_PI)
            ph = ph.astype(float)
        else:
            ph = ts[sl, None] * lnn[None, :]
        # real/imag accumulated separately: ~3x faster than complex exp
        vals[sl] = (amp[None, :] * np.cos(ph)).sum(axis=1)
        vals[sl] -= 1j * (amp[None, :] * np.sin(ph)).sum(axis=1)

    s = sigma + 1j * ts
    Mf = float(M)
    vals += Mf ** (1.0 - s) / (s - 1.0) + 0.5 * Mf ** (-s)
    poch = s.copy()
    mpow = Mf ** (-s - 1.0)
    for k in range(1, K + 1):
        vals += _B2K_OVER_FACT[k] * poch * mpow
        poch = poch * (s + (2 * k - 1)) * (s + 2 * k)
        mpow = mpow / (Mf * Mf)
    bound = _em_remainder_bound(sigma, tmax, M, K)
    bound += _em_roundoff(tmax, M, float(amp.sum()), longdouble_phase)
    return vals, np.full(ts.shape, bound)


def _em_sigma_grid(sigmas: np.ndarray, t: float,
                   cfg: PrecisionConfig = DEFAULT,
                   target: float | None = None) -> tuple[np.ndarray, np.ndarray]:
    """zeta(sigma_j + i t) over a sigma grid at one height t."""
    sigmas = np.asarray(sigmas, dtype=float)
    if target is None:
        target = cfg.target_abs_error
    smin = float(np.min(sigmas))
    K = cfg.euler_maclaurin_terms
    M = _em_choose_M(smin, abs(t), cfg, target)
    n = np.arange(1, M, dtype=float)
    lnn = np.log(n.astype(np.longdouble))
    ph = (np.longdouble(t) * lnn) % np.longdouble(TWO_PI)
    phase = np.exp(-1j * ph.astype(float))
    ampm = np.exp(-np.outer(sigmas, lnn.astype(float)))
    vals = ampm @ phase

    s = sigmas + 1j * t
    Mf = float(M)
    vals += Mf ** (1.0 - s) / (s - 1.0) + 0.5 * Mf ** (-s)
    poch = s.astype(complex)
    mpow = Mf ** (-s - 1.0)
    for k in range(1, K + 1):
        vals += _B2K_OVER_FACT[k] * poch * mpow
        poch = poch * (s + (2 * k - 1)) * (s + 2 * k)
        mpow = mpow / (Mf * Mf)
    bound = _em_remainder_bound(smin, abs(t), M, K)
    bound += _em_roundoff(abs(t), M, float(ampm.sum(axis=1).max()))
    return vals, np.full(sigmas.shape, bound)


def zeta_em(s: complex | ComplexPoint,
            cfg: PrecisionConfig = DEFAULT) -> ZetaValue:
    """Euler-Maclaurin evaluation of zeta(s) with an attached error bound.

    Requires sigma >= -1 and |s - 1| >= the pole threshold.
    """
    if isinstance(s, ComplexPoint):
        s = s.s
    s = complex(s)
    if s.real < -1.0:
        raise ValueError("zeta_em requires sigma >= -1")
    if abs(s - 1.0) < POLE_THRESHOLD:
        raise errors.PoleAt1(f"|s-1| = {abs(s - 1.0):.2e} below threshold")
    conj = s.imag < 0
    t = abs(s.imag)
    vals, bounds = _em_batch(s.real, np.array([t]), cfg)
    v = complex(vals[0])
    if conj:
        v = v.conjugate()
    return ZetaValue(v, float(bounds[0]))


# ----------------------------------------------------------------------
# Riemann-Siegel Z
# ----------------------------------------------------------------------

_RS_CHEBS = (C0_CHEB, C1_CHEB, C2_CHEB, C3_CHEB)


def rs_error_bound(t, n_corr: int):
    """Empirical absolute error bound of the RS path, vectorized in t."""
    t = np.maximum(np.asarray(t, dtype=float), 1e-6)
    return RS_BOUND_COEF[n_corr] * t ** (-(2 * n_corr + 1) / 4.0) + 5e-18 * t


def _rs_z_batch(ts: np.ndarray, n_corr: int) -> tuple[np.ndarray, np.ndarray]:
    """Hardy Z via the Riemann-Siegel formula, vectorized, t >= RS_T_MIN."""
    ts = np.asarray(ts, dtype=float)
    if ts.size and float(np.min(ts)) < RS_T_MIN:
        raise ValueError("RS path requires t >= RS_T_MIN")
    tau = np.sqrt(ts / TWO_PI)
    N = np.floor(tau).astype(int)
    p = tau - N
    theta_ld = _rs_theta_ld(ts)
    two_pi_ld = 2 * np.arccos(np.longdouble(-1.0))

    vals = np.zeros(ts.shape)
    # main sum, grouped by common truncation N
    order = np.argsort(N, kind="stable")
    Nuniq, starts = np.unique(N[order], return_index=True)
    bounds_idx = np.append(starts, N.size)
    for Nv, a, b in zip(Nuniq, bounds_idx[:-1], bounds_idx[1:]):
        idx = order[a:b]
        n = np.arange(1, Nv + 1, dtype=float)
        lnn = np.log(n.astype(np.longdouble))
        arg = (theta_ld[idx][:, None]
               - ts[idx].astype(np.longdouble)[:, None] * lnn[None, :]
               ) % two_pi_ld
        vals[idx] = 2.0 * (np.cos(arg.astype(float))
                           / np.sqrt(n)[None, :]).sum(axis=1)

    # correction terms
    corr = np.zeros(ts.shape)
    taupow = np.ones(ts.shape)
    x = 2.0 * p - 1.0  # chebyshev domain [0,1] -> [-1,1]
    for k in range(n_corr):
        ck = np.polynomial.chebyshev.chebval(x, _RS_CHEBS[k])
        corr += ck * taupow
        taupow = taupow / tau
    sign = np.where(N % 2 == 1, 1.0, -1.0)
    vals += sign * tau ** (-0.5) * corr
    return vals, rs_error_bound(ts, n_corr)


def hardy_z_batch(ts: np.ndarray, abs_tol: float,
                  cfg: PrecisionConfig = DEFAULT) -> tuple[np.ndarray, np.ndarray]:
    """Z(t) on an array, choosing RS or Euler-Maclaurin per point.

    The RS path is used wherever its error bound meets ``abs_tol``;
    everything else falls back to Euler-Maclaurin at the same target.
    """
    ts = np.asarray(ts, dtype=float)
    vals = np.empty(ts.shape)
    errs = np.empty(ts.shape)
    n_corr = min(cfg.rs_correction_terms, len(_RS_CHEBS))
    use_rs = (ts >= RS_T_MIN) & (rs_error_bound(ts, n_corr) <= abs_tol)
    if np.any(use_rs):
        vals[use_rs], errs[use_rs] = _rs_z_batch(ts[use_rs], n_corr)
    rest = ~use_rs
    if np.any(rest):
        tr = ts[rest]
        theta = _theta_any(tr)
        # chunk by octave so each chunk shares a sensible truncation
        sub_v = np.empty(tr.shape)
        sub_e = np.empty(tr.shape)
        edges = [0.0, 64.0]
        while edges[-1] < float(np.max(tr)):
            edges.append(edges[-1] * 2)
        for lo, hi in zip(edges[:-1], edges[1:]):
            m = (tr >= lo) & (tr < hi) if hi < float(np.max(tr)) \
                else (tr >= lo)
            if not np.any(m):
                continue
            zv, zb = _em_batch(0.5, tr[m], cfg, target=abs_tol)
            w = np.exp(1j * theta[m]) * zv
            sub_v[m] = w.real
            sub_e[m] = zb + np.abs(w.imag)
        vals[rest] = sub_v
        errs[rest] = sub_e
    return vals, errs


def hardy_z(t: float, cfg: PrecisionConfig = DEFAULT) -> ZetaValue:
    """Hardy's Z(t) = exp(i theta(t)) zeta(1/2 + i t), real-valued."""
    if t < 0:
        raise ValueError("hardy_z requires t >= 0")
    vals, errs = hardy_z_batch(np.array([float(t)]),
                               cfg.target_abs_error, cfg)
    return ZetaValue(complex(vals[0]), float(errs[0]))


def log_abs_zeta_half(t: float, cfg: PrecisionConfig = DEFAULT) -> float:
    """log|zeta(1/2+it)| away from zero ordinates.

    Raises NearZeroOrdinate when |Z(t)| < 10 * target_abs_error; callers
    are required to subtract the singularity instead.
    """
    z = hardy_z(t, cfg)
    az = abs(z.value.real)
    if az < 10.0 * cfg.target_abs_error:
        raise errors.NearZeroOrdinate(
            f"|Z({t})| = {az:.2e} too close to a zero ordinate")
    return math.log(az)


# ----------------------------------------------------------------------
# Branch-tracked log zeta
# ----------------------------------------------------------------------

_BRANCH_MAX_ROUNDS = 36
_ZERO_ON_PATH_ABS = 1e-12


def _log_zeta_anchor(t: float, cfg: PrecisionConfig) -> complex:
    """log zeta(2 + i t) on the standard branch.

    |log zeta(2+it)| <= sum Lambda(n) / (n^2 log n) = log zeta(2) < pi/2,
    so the principal logarithm *is* the continuously-varied branch.
    """
    z = complex(zeta_em(complex(2.0, t), cfg))
    return complex(np.log(z))


def log_zeta_branch(sigma: float, t: float,
                    cfg: PrecisionConfig = DEFAULT) -> complex:
    """log zeta(sigma + i t), branch by continuous variation.

    The branch is anchored at s = 2 + i t (principal value there) and
    tracked along the horizontal segment toward sigma + i t with step
    halving until every step moves log zeta by less than pi/2.
    """
    if sigma < 0.5:
        raise ValueError("log_zeta_branch requires sigma >= 1/2")
    if t < 0:
        raise ValueError("log_zeta_branch requires t >= 0")
    if abs(t) < POLE_THRESHOLD and sigma <= 1.0 + POLE_THRESHOLD:
        raise errors.PoleAt1("horizontal segment passes the pole at s = 1")
    anchor = _log_zeta_anchor(t, cfg)
    if abs(sigma - 2.0) < 1e-12:
        return anchor

    grid = np.linspace(2.0, sigma, 24)
    vals, _ = _em_sigma_grid(grid, t, cfg)
    for _round in range(_BRANCH_MAX_ROUNDS):
        small = np.abs(vals) < _ZERO_ON_PATH_ABS
        if np.any(small):
            raise errors.ZeroOnPath(
                f"|zeta| below {_ZERO_ON_PATH_ABS} at sigma="
                f"{grid[small][0]:.6g}, t={t}")
        dlog = np.log(vals[1:] / vals[:-1])
        bad = np.abs(dlog) >= 0.5 * math.pi
        if not np.any(bad):
            total = complex(math.fsum(dlog.real.tolist()),
                            math.fsum(dlog.imag.tolist()))
            return anchor + total
        mids = 0.5 * (grid[:-1][bad] + grid[1:][bad])
        grid = np.sort(np.concatenate([grid, mids]))
        if sigma < 2.0:
            grid = grid[::-1]
        vals, _ = _em_sigma_grid(grid, t, cfg)
    raise errors.BranchAmbiguous(
        f"branch tracking failed at sigma={sigma}, t={t}")


# ----------------------------------------------------------------------
# Approximate functional equation (bulk scans off the half-line)
# ----------------------------------------------------------------------

#: Empirical coefficient of the AFE error ~ AFE_BOUND_COEF * t^(-sigma/2-1/4)
AFE_BOUND_COEF = 3.0


def _log_chi(s: np.ndarray) -> np.ndarray:
    """log of the functional-equation factor chi(s) =
    pi^(s-1/2) Gamma((1-s)/2) / Gamma(s/2)."""
    return ((s - 0.5) * math.log(math.pi)
            + loggamma((1.0 - s) / 2.0) - loggamma(s / 2.0))


def zeta_afe_batch(sigma: float, ts: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """zeta(sigma+it) by the symmetric approximate functional equation.

    Accuracy ~ t^(-sigma/2 - 1/4); intended for long scans at heights
    where Euler-Maclaurin is too expensive and ~1e-3 relative suffices.
    """
    ts = np.asarray(ts, dtype=float)
    if ts.size and float(np.min(ts)) < RS_T_MIN:
        raise ValueError("AFE path requires t >= RS_T_MIN")
    tau = np.sqrt(ts / TWO_PI)
    N = np.floor(tau).astype(int)
    s = sigma + 1j * ts
    chi = np.exp(_log_chi(s))
    vals = np.zeros(ts.shape, dtype=complex)
    order = np.argsort(N, kind="stable")
    Nuniq, starts = np.unique(N[order], return_index=True)
    bidx = np.append(starts, N.size)
    for Nv, a, b in zip(Nuniq, bidx[:-1], bidx[1:]):
        idx = order[a:b]
        n = np.arange(1, Nv + 1, dtype=float)
        lnn = np.log(n)
        ph = (ts[idx].astype(np.longdouble)[:, None]
              * lnn.astype(np.longdouble)[None, :]) % np.longdouble(TWO_PI)
        e = np.exp(-1j * ph.astype(float))
        direct = (n[None, :] ** (-sigma) * e).sum(axis=1)
        mirror = (n[None, :] ** (sigma - 1.0) * np.conj(e)).sum(axis=1)
        vals[idx] = direct + chi[idx] * mirror
    bound = AFE_BOUND_COEF * ts ** (-sigma / 2.0 - 0.25)
    return vals, bound
