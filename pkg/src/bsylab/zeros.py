"""Nontrivial-zero ordinates: production, import/export, validation,
and the counting function N(t).

Counting is double-checked: the smooth count round(theta/pi + 1 + S(t))
from branch-tracked arg zeta must match the sign-change count of Hardy's
Z.  No Turing-method rigor is attempted at desk heights; the double
check substitutes (mismatch raises Inconsistent and triggers grid
refinement in find_zeros_up_to).
"""

import math
import os
from dataclasses import dataclass

import numpy as np

from . import errors, zeta
from .config import DEFAULT, PrecisionConfig

#: Default absolute accuracy of computed ordinates.
ORDINATE_ACCURACY = 1e-9

#: Zeros are scanned with step ~ mean_gap / _SCAN_DENSITY.
_SCAN_DENSITY = 24.0

_BLOCK = 128.0


@dataclass
class ZeroList:
    """Validated ascending list of zero ordinates up to covered_height."""

    ordinates: np.ndarray
    covered_height: float
    source: str = "computed"
    verified: bool = False

    def __post_init__(self):
        self.ordinates = np.asarray(self.ordinates, dtype=float)
        if self.ordinates.size:
            if np.any(self.ordinates <= 0):
                raise ValueError("ordinates must be positive")
            if np.any(np.diff(self.ordinates) <= 0):
                raise errors.NotAscending("ordinates must be strictly ascending")
            if float(self.ordinates[-1]) > self.covered_height + 1e-9:
                raise ValueError("ordinate exceeds covered_height")
        if self.source not in ("computed", "imported"):
            raise ValueError("source must be 'computed' or 'imported'")

    def __len__(self):
        return self.ordinates.size

    def up_to(self, t: float) -> np.ndarray:
        return self.ordinates[self.ordinates <= t]

    def require_height(self, t: float):
        if t > self.covered_height + 1e-12:
            raise errors.ZeroListInsufficient(
                f"zero list covers {self.covered_height}, need {t}")


@dataclass(frozen=True)
class ZeroCandidate:
    """Hypothetical off-line zero rho = beta + i gamma (beta > 1/2)."""

    beta: float
    gamma: float

    def __post_init__(self):
        if not 0.5 < self.beta < 1.0:
            raise errors.BetaOutOfRange(
                f"beta must lie strictly in (1/2, 1), got {self.beta}")


def mean_gap(t: float) -> float:
    """Mean spacing of ordinates near height t."""
    return 2.0 * math.pi / math.log(max(t, 20.0) / (2.0 * math.pi))


def _scan_grid(lo: float, hi: float, density: float) -> np.ndarray:
    """Height-adapted scan grid on [lo, hi]."""
    pieces = []
    a = lo
    while a < hi:
        b = min(hi, max(a * 1.5, a + 64.0))
        step = mean_gap(b) / density
        pieces.append(np.arange(a, b, step))
        a = b
    pieces.append(np.array([hi]))
    return np.concatenate(pieces)


def _z_signs(ts: np.ndarray, cfg: PrecisionConfig) -> np.ndarray:
    vals, _ = zeta.hardy_z_batch(ts, 1e-6, cfg)
    return vals


def _bisect_brackets(lo: np.ndarray, hi: np.ndarray, flo: np.ndarray,
                     cfg: PrecisionConfig, iters: int = 45) -> np.ndarray:
    """Vectorized bisection of sign-change brackets of Z."""
    lo, hi = lo.copy(), hi.copy()
    slo = np.sign(flo)
    for _ in range(iters):
        if float(np.max(hi - lo)) < 0.05 * ORDINATE_ACCURACY:
            break
        mid = 0.5 * (lo + hi)
        fm, _ = zeta.hardy_z_batch(mid, 1e-9, cfg)
        left = np.sign(fm) == slo
        lo = np.where(left, mid, lo)
        hi = np.where(left, hi, mid)
    return 0.5 * (lo + hi)


def _newton_polish(g: np.ndarray, cfg: PrecisionConfig,
                   rounds: int = 2) -> np.ndarray:
    """Newton refinement of near-roots of Z using the accurate path."""
    h = 1e-5
    for _ in range(rounds):
        pts = np.concatenate([g, g + h, g - h])
        vals, _ = zeta.hardy_z_batch(pts, cfg.target_abs_error, cfg)
        z0 = vals[: g.size]
        zp = (vals[g.size: 2 * g.size] - vals[2 * g.size:]) / (2 * h)
        safe = np.abs(zp) > 1e-8
        step = np.where(safe, z0 / np.where(safe, zp, 1.0), 0.0)
        g = g - np.clip(step, -1e-3, 1e-3)
    return g


def _smooth_count(t: float, cfg: PrecisionConfig) -> int:
    """round(theta(t)/pi + 1 + S(t)) with branch-tracked S."""
    th = zeta.rs_theta(t)
    lz = zeta.log_zeta_branch(0.5, t, cfg)
    x = th / math.pi + 1.0 + lz.imag / math.pi
    n = int(round(x))
    if abs(x - n) > 0.25:
        raise errors.Inconsistent(
            f"smooth zero count {x} suspiciously far from an integer at t={t}")
    return n


def count_zeros(t: float, cfg: PrecisionConfig = DEFAULT) -> int:
    """N(t), cross-checked between the smooth formula and sign changes."""
    if t < 10.0:
        raise ValueError("count_zeros requires t >= 10")
    zt, _ = zeta.hardy_z_batch(np.array([t]), 1e-9, cfg)
    if abs(float(zt[0])) < 1e-6:
        raise errors.OnOrdinate(f"t = {t} is (numerically) a zero ordinate")
    n_formula = _smooth_count(t, cfg)
    n_scan = _sign_change_count(t, cfg)
    if n_formula != n_scan:
        raise errors.Inconsistent(
            f"N({t}): smooth formula gives {n_formula}, sign-change scan "
            f"gives {n_scan}")
    return n_formula


def _sign_change_count(t: float, cfg: PrecisionConfig,
                       density: float = _SCAN_DENSITY) -> int:
    grid = _scan_grid(5.0, t, density)
    vals = _z_signs(grid, cfg)
    return int(np.count_nonzero(np.sign(vals[1:]) != np.sign(vals[:-1])))


def find_zeros_up_to(T: float, cfg: PrecisionConfig = DEFAULT) -> ZeroList:
    """All ordinates in (0, T], verified against the independent count.

    Scans Z for sign changes with height-adapted steps, bisects each
    bracket, Newton-polishes on the accurate path, and refines any
    128-unit block whose census disagrees with round(theta/pi + 1 + S).
    """
    if T < 15.0:
        raise ValueError("find_zeros_up_to requires T >= 15")
    found = _find_in_window(5.0, T, cfg, _SCAN_DENSITY)

    # block-wise census against the smooth count
    edges = list(np.arange(_BLOCK, T, _BLOCK)) + [T]
    counts = []
    prev = 0
    for e in edges:
        e_eff = _shift_off_ordinate(e, found, T)
        c = _smooth_count(e_eff, cfg)
        counts.append((e_eff, c))
    lo_edge = 5.0
    zs = []
    for (e_eff, c) in counts:
        expect = c - prev
        got = found[(found > lo_edge) & (found <= e_eff)]
        density = _SCAN_DENSITY
        for _ in range(4):
            if got.size == expect:
                break
            density *= 4.0
            got = _find_in_window(max(lo_edge - 0.5, 5.0), e_eff + 1e-12,
                                  cfg, density)
            got = got[(got > lo_edge) & (got <= e_eff)]
        if got.size != expect:
            raise errors.Inconsistent(
                f"block ({lo_edge}, {e_eff}]: found {got.size} zeros, "
                f"smooth count expects {expect}")
        zs.append(got)
        prev, lo_edge = c, e_eff
    ordinates = np.concatenate(zs) if zs else np.zeros(0)
    ordinates = ordinates[ordinates <= T]
    return ZeroList(ordinates, covered_height=T, source="computed",
                    verified=True)


def _find_in_window(lo: float, hi: float, cfg: PrecisionConfig,
                    density: float) -> np.ndarray:
    grid = _scan_grid(lo, hi, density)
    vals = _z_signs(grid, cfg)
    idx = np.nonzero(np.sign(vals[1:]) != np.sign(vals[:-1]))[0]
    if idx.size == 0:
        return np.zeros(0)
    roots = _bisect_brackets(grid[idx], grid[idx + 1], vals[idx], cfg)
    return np.sort(_newton_polish(roots, cfg))


def _shift_off_ordinate(e: float, found: np.ndarray, T: float) -> float:
    """Nudge a block edge away from any found ordinate."""
    e = min(e, T)
    if found.size == 0:
        return e
    for _ in range(50):
        d = np.min(np.abs(found - e)) if found.size else 1.0
        if d > 0.05:
            return e
        e = max(e - 0.07, 10.0)
    return e


def verify_zero_list(zl: ZeroList, cfg: PrecisionConfig = DEFAULT) -> ZeroList:
    """Set ``verified`` by census and per-entry residual checks."""
    g = zl.ordinates
    if g.size:
        vals, _ = zeta.hardy_z_batch(g, cfg.target_abs_error, cfg)
        h = 1e-5
        vp, _ = zeta.hardy_z_batch(g + h, 1e-9, cfg)
        vm, _ = zeta.hardy_z_batch(g - h, 1e-9, cfg)
        deriv = np.abs(vp - vm) / (2 * h)
        bad = np.abs(vals) > 1e-7 * np.maximum(deriv, 1.0)
        if np.any(bad):
            raise errors.Inconsistent(
                "zero residual |Z(gamma)| too large",
                index=int(np.nonzero(bad)[0][0]))
    top = _shift_off_ordinate(zl.covered_height, g, zl.covered_height)
    expected = _smooth_count(top, cfg) if top >= 10 else 0
    n_in = int(np.count_nonzero(g <= top))
    if n_in != expected:
        raise errors.Inconsistent(
            f"census mismatch: list has {n_in} zeros below {top}, "
            f"smooth count expects {expected}")
    return ZeroList(zl.ordinates, zl.covered_height, zl.source, True)


# ----------------------------------------------------------------------
# Plain-text zero files
# ----------------------------------------------------------------------

def import_zeros(stream) -> ZeroList:
    """Parse the plain-text zero format.

    UTF-8 text, '#'-prefixed comment lines, one decimal ordinate per
    line, strictly ascending, dot decimal separator.  ``stream`` is a
    file path or an iterable of lines.
    """
    close = False
    if isinstance(stream, (str, os.PathLike)):
        stream = open(stream, "r", encoding="utf-8")
        close = True
    try:
        return _parse_zero_lines(stream)
    finally:
        if close:
            stream.close()


def _parse_zero_lines(stream) -> ZeroList:
    ords = []
    for ln, raw in enumerate(stream, start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        try:
            v = float(line)
        except ValueError:
            raise errors.ParseError(f"line {ln}: not a decimal: {line!r}",
                                    line_number=ln)
        if not math.isfinite(v) or v <= 0:
            raise errors.ParseError(f"line {ln}: ordinate must be positive",
                                    line_number=ln)
        if ords and v <= ords[-1]:
            raise errors.NotAscending(
                f"line {ln}: {v} not above previous {ords[-1]}")
        ords.append(v)
    arr = np.asarray(ords)
    covered = float(arr[-1]) if arr.size else 0.0
    return ZeroList(arr, covered_height=covered, source="imported",
                    verified=False)


def export_zeros(zl: ZeroList, stream) -> None:
    """Write the plain-text format (12 decimal places)."""
    close = False
    if isinstance(stream, str):
        stream = open(stream, "w", encoding="utf-8")
        close = True
    try:
        stream.write(f"# zero ordinates up to {zl.covered_height!r}\n")
        stream.write(f"# source={zl.source} verified={zl.verified}\n")
        for g in zl.ordinates:
            stream.write(f"{g:.12f}\n")
    finally:
        if close:
            stream.close()
