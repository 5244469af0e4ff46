"""Dirichlet polynomials: exact mean squares and log-zeta moments.

R(t) = sum of r(n) n^(-it) over a coefficient table.  The mean square
over [T, 2T] has an exact closed form (diagonal T * sum r^2 plus
oscillatory off-diagonal terms), no quadrature.  The moment integral of
log zeta(alpha + i(t+h)) |R(t)|^2 over [T, 2T] is compared against its
exact main term T * sum over mn <= N of Lambda(n) r(m) r(mn) /
(n^(alpha+ih) log n), normalized by N (log TN)^(3/2) sum r^2.  The
windowed-argument resonance statistics are the corresponding exact
ratios with sin^2((h/2) log n) and sin(h log n) weights.
"""

import cmath
import math
from dataclasses import dataclass

import numpy as np

from . import errors, zeta
from .accum import comp_sum
from .config import DEFAULT, PrecisionConfig
from .resonator import ResonatorTable
from .sieve import primes_up_to

__all__ = [
    "Lemma3Request", "eval_R", "eval_R_batch", "mean_square_exact",
    "lemma3_lhs", "lemma3_rhs", "lemma3_compare",
    "s1_resonance_statistic",
]


def _table_arrays(table) -> tuple[np.ndarray, np.ndarray]:
    """Accept a ResonatorTable or a plain (ns, rs) pair."""
    if isinstance(table, ResonatorTable):
        return table.ns, table.rs
    ns, rs = table
    ns = np.asarray(ns, dtype=np.int64)
    rs = np.asarray(rs, dtype=float)
    if ns.size != rs.size or ns.size == 0 or np.any(np.diff(ns) <= 0):
        raise ValueError("table must be nonempty with ascending n")
    return ns, rs


def _table_capacity(table) -> int:
    if isinstance(table, ResonatorTable):
        return int(table.params.N)
    ns, _ = _table_arrays(table)
    return int(ns[-1])


@dataclass(frozen=True)
class Lemma3Request:
    """Inputs of the moment comparison."""

    alpha: float
    h: float
    T: float
    table: object
    eps_margin: float = 0.05

    def __post_init__(self):
        if not 0.5 <= self.alpha <= 2.0:
            raise ValueError("alpha must lie in [1/2, 2]")
        if self.T < 3.0:
            raise ValueError("T must be >= 3")
        if self.eps_margin <= 0:
            raise ValueError("eps_margin must be positive")
        _table_arrays(self.table)


def eval_R_batch(table, ts) -> np.ndarray:
    """R(t) = sum of r(n) n^(-it) on an array of heights."""
    ns, rs = _table_arrays(table)
    ts = np.asarray(ts, dtype=float)
    lnn = np.log(ns.astype(np.longdouble))
    out = np.empty(ts.shape, dtype=complex)
    step = max(1, 4_000_000 // max(ns.size, 1))
    for i in range(0, ts.size, step):
        sl = slice(i, min(i + step, ts.size))
        ph = (ts[sl].astype(np.longdouble)[:, None] * lnn[None, :]) \
            % np.longdouble(2 * np.pi)
        out[sl] = (rs[None, :]
                   * np.exp(-1j * ph.astype(float))).sum(axis=1)
    return out


def eval_R(table, t: float) -> complex:
    """R(t) for a single height, compensated accumulation."""
    ns, rs = _table_arrays(table)
    ph = (float(t) * np.log(ns.astype(np.longdouble))) \
        % np.longdouble(2 * np.pi)
    terms = rs * np.exp(-1j * ph.astype(float))
    return complex(comp_sum(terms.real), comp_sum(terms.imag))


def mean_square_exact(table, T: float) -> float:
    """Integral of |R(t)|^2 over [T, 2T], in closed form.

    Equals T * sum r^2 + sum over pairs m < n of
    2 r(m) r(n) (sin(2T l) - sin(T l)) / l with l = log(n/m).
    """
    T = float(T)
    if T <= 0:
        raise ValueError("T must be positive")
    ns, rs = _table_arrays(table)
    diag = T * comp_sum(rs ** 2)
    if ns.size == 1:
        return diag
    lnn = np.log(ns.astype(np.longdouble))
    i, j = np.triu_indices(ns.size, k=1)
    ell_ld = lnn[j] - lnn[i]
    ell = ell_ld.astype(float)
    s2 = np.sin(((2.0 * np.longdouble(T)) * ell_ld
                 % np.longdouble(2 * np.pi)).astype(float))
    s1 = np.sin((np.longdouble(T) * ell_ld
                 % np.longdouble(2 * np.pi)).astype(float))
    off = 2.0 * rs[i] * rs[j] * (s2 - s1) / ell
    return diag + comp_sum(off)


# ----------------------------------------------------------------------
# Moment integral (numerical side)
# ----------------------------------------------------------------------

#: Above this height the zeta evaluations inside the moment integral
#: switch from Euler-Maclaurin to the symmetric truncated functional
#: equation (accuracy ~ t^(-alpha/2 - 1/4), far cheaper).
_AFE_CUTOVER = 30_000.0


def _phase_increment(eval_one, t0: float, t1: float,
                     v0: complex, v1: complex, depth: int = 24) -> float:
    """Continuous change of arg zeta between two nearby heights.

    The principal angle of v1/v0 is trusted once it falls below pi/2;
    otherwise the interval is bisected with a fresh evaluation at the
    midpoint and the two halves are summed.
    """
    d = cmath.phase(v1 / v0)
    if abs(d) <= 0.5 * math.pi:
        return d
    if depth <= 0:
        raise errors.BranchAmbiguous(
            f"phase increment stays above pi/2 near t={t0:.6f} "
            "after repeated bisection")
    tm = 0.5 * (t0 + t1)
    vm = eval_one(tm)
    return (_phase_increment(eval_one, t0, tm, v0, vm, depth - 1)
            + _phase_increment(eval_one, tm, t1, vm, v1, depth - 1))


def _log_zeta_vertical(alpha: float, ts: np.ndarray,
                       cfg: PrecisionConfig) -> tuple[np.ndarray, float]:
    """Continuous log zeta(alpha + i t) along an ascending fine grid.

    The branch is anchored to the horizontal-tracking value at the first
    grid point, continued by phase unwrapping, and cross-checked against
    an independent anchor at the last point.  Grid steps whose naive
    phase increment exceeds pi/2 (a close zero just off the path) are
    resolved by local bisection with extra evaluations.  Returns
    (values, pointwise_error_bound).
    """
    if np.any(np.diff(ts) <= 0):
        raise ValueError("grid must be ascending")
    if float(ts[-1]) > _AFE_CUTOVER:
        vals, bnd = zeta.zeta_afe_batch(alpha, ts)
        point_err = float(np.max(bnd))

        def eval_one(t: float) -> complex:
            return complex(zeta.zeta_afe_batch(alpha, np.array([t]))[0][0])
    else:
        vals, bnds = zeta._em_batch(alpha, ts, cfg, longdouble_phase=False)
        point_err = float(np.max(bnds))

        def eval_one(t: float) -> complex:
            return complex(zeta._em_batch(alpha, np.array([t]), cfg)[0][0])
    mod = np.abs(vals)
    if np.any(mod < 1e-9):
        raise errors.ZeroOnPath(
            f"|zeta({alpha}+it)| below 1e-9 on the grid")
    la = np.log(mod)
    ph = np.unwrap(np.angle(vals))
    steps = np.diff(ph)
    bad = np.flatnonzero(np.abs(steps) > 0.5 * math.pi)
    if bad.size > 200:
        raise errors.BranchAmbiguous(
            f"{bad.size} grid steps exceed pi/2; grid far too coarse")
    for i in bad.tolist():
        inc = _phase_increment(eval_one, float(ts[i]), float(ts[i + 1]),
                               complex(vals[i]), complex(vals[i + 1]))
        ph[i + 1:] += (ph[i] + inc) - ph[i + 1]
    a0 = zeta.log_zeta_branch(alpha, float(ts[0]), cfg)
    ph += a0.imag - ph[0]
    a1 = zeta.log_zeta_branch(alpha, float(ts[-1]), cfg)
    drift = abs(ph[-1] - a1.imag)
    if drift > 0.5 * math.pi:
        raise errors.BranchAmbiguous(
            f"unwrapped phase misses the endpoint anchor by {drift:.3f}")
    return la + 1j * ph, point_err + drift / max(ts.size, 1)


def lemma3_lhs(req: Lemma3Request, cfg: PrecisionConfig = DEFAULT,
               spacing: float = 0.05) -> complex:
    """Integral of log zeta(alpha + i(t+h)) |R(t)|^2 over [T, 2T].

    Composite-Simpson on a uniform grid (halved once for an error
    check); the vertical branch of log zeta is unwrapped along the grid
    and anchored to the horizontal-tracking branch at both ends.
    """
    alpha, h, T = req.alpha, req.h, req.T
    if alpha < 0.5 + req.eps_margin:
        raise ValueError(
            f"numerical moment requires alpha >= 1/2 + {req.eps_margin}")
    n_half = 2 * max(8, int(math.ceil(T / spacing / 2)))  # fine steps
    ts = T + (T / n_half) * np.arange(n_half + 1)
    lz, point_err = _log_zeta_vertical(alpha, ts + h, cfg)
    R = eval_R_batch(req.table, ts)
    f = lz * np.abs(R) ** 2

    def simpson(y, dx):
        w = np.ones(y.size)
        w[1:-1:2] = 4.0
        w[2:-1:2] = 2.0
        return (dx / 3.0) * complex(comp_sum(w * y.real),
                                    comp_sum(w * y.imag))

    dx = T / n_half
    fine = simpson(f, dx)
    coarse = simpson(f[::2], 2.0 * dx)
    # only the discretization part responds to refinement; the pointwise
    # evaluation-error term is a property of the zeta engine, not the grid
    est_quad = abs(fine - coarse) / 15.0
    if est_quad > max(cfg.quad_tol * T, 1e-6 * abs(fine) + 1e-12):
        return lemma3_lhs(req, cfg, spacing=spacing / 4.0) \
            if spacing > 1e-3 else fine
    return fine


def lemma3_rhs(req: Lemma3Request) -> complex:
    """T * sum over mn <= N of Lambda(n) r(m) r(mn) / (n^(alpha+ih) log n).

    Exact finite sum; n runs over prime powers and r(mn) != 0 restricts
    to n prime and coprime to m for squarefree-supported tables.
    """
    ns, rs = _table_arrays(req.table)
    N = _table_capacity(req.table)
    lut = {int(n): float(r) for n, r in zip(ns, rs)}
    s = complex(req.alpha, req.h)
    total = 0.0 + 0.0j
    for p in primes_up_to(N).tolist():
        lp = math.log(p)
        pk = p
        while pk <= N:
            # coefficient of the prime power pk
            c = 0.0
            for m, rm in lut.items():
                if m * pk <= N:
                    rmn = lut.get(m * pk)
                    if rmn:
                        c += rm * rmn
            if c != 0.0:
                total += c * lp * pk ** (-s) / (math.log(pk))
            pk *= p
    return req.T * total


def lemma3_compare(req: Lemma3Request,
                   cfg: PrecisionConfig = DEFAULT,
                   spacing: float = 0.05) -> float:
    """|LHS - RHS| / (N (log TN)^(3/2) sum r^2)."""
    ns, rs = _table_arrays(req.table)
    N = _table_capacity(req.table)
    gap = abs(lemma3_lhs(req, cfg, spacing=spacing) - lemma3_rhs(req))
    scale = N * math.log(req.T * N) ** 1.5 * comp_sum(rs ** 2)
    return gap / scale


# ----------------------------------------------------------------------
# Windowed-argument resonance statistics
# ----------------------------------------------------------------------

def s1_resonance_statistic(table, h: float, T: float = 0.0,
                           cfg: PrecisionConfig = DEFAULT
                           ) -> tuple[float, float]:
    """Exact main-term ratios of the windowed argument statistics.

    Returns (sin_sq, sin_lin):
      sin_sq  = (2/pi) * sum Lambda(n) r(m) r(mn) sin^2((h/2) log n)
                       / (sqrt(n) (log n)^2)  /  sum r^2,
      sin_lin = 2 * the same sum with sin(h log n) weight / sum r^2.
    Both are exact finite sums over mn <= N (T does not enter the main
    terms; the argument is kept for interface symmetry).
    """
    if not 0.0 <= h <= 1.0:
        raise ValueError("need 0 <= h <= 1")
    ns, rs = _table_arrays(table)
    N = _table_capacity(table)
    lut = {int(n): float(r) for n, r in zip(ns, rs)}
    s_sq = 0.0
    s_lin = 0.0
    for p in primes_up_to(N).tolist():
        lp = math.log(p)
        pk = p
        while pk <= N:
            lpk = math.log(pk)
            c = 0.0
            for m, rm in lut.items():
                if m * pk <= N:
                    rmn = lut.get(m * pk)
                    if rmn:
                        c += rm * rmn
            if c != 0.0:
                base = c * lp / (math.sqrt(pk) * lpk * lpk)
                s_sq += base * math.sin(0.5 * h * lpk) ** 2
                s_lin += base * math.sin(h * lpk)
            pk *= p
    den = comp_sum(rs ** 2)
    return (2.0 / math.pi) * s_sq / den, 2.0 * s_lin / den
