"""Evaluate zeta near the critical line with certified error bounds.

Shows the three evaluation regimes side by side: Euler-Maclaurin (any
sigma, moderate t), Riemann-Siegel (critical line, large t), and the
Hardy Z function that makes critical-line zeros visible as sign changes.
"""
import numpy as np

from bsylab import DEFAULT, hardy_z_batch, log_zeta_branch, zeta_em

print("zeta(1/2 + it) by Euler-Maclaurin, with error bounds")
print(f"{'t':>8}  {'Re':>22}  {'Im':>22}  {'bound':>10}")
for t in (0.0, 14.0, 14.2, 100.0, 1000.0):
    val = zeta_em(complex(0.5, t), DEFAULT)
    print(f"{t:8.1f}  {val.value.real:22.15f}  {val.value.imag:22.15f}"
          f"  {val.abs_error:10.2e}")

print()
print("Hardy Z(t): real, zero exactly where zeta vanishes on the line")
ts = np.linspace(12.0, 26.0, 8)
zs, bnd = hardy_z_batch(ts, 1e-10, DEFAULT)
for t, z in zip(ts, zs):
    marker = "  <- sign change nearby" if abs(z) < 0.5 else ""
    print(f"  Z({t:5.1f}) = {z:+.6f}{marker}")
print(f"  (uniform error bound {float(np.max(bnd)):.2e})")

print()
print("log zeta with a tracked branch (continuous in t, principal at 2+it)")
for t in (50.0, 50.5, 51.0):
    lz = log_zeta_branch(0.6, t, DEFAULT)
    print(f"  log zeta(0.6 + {t}i) = {lz.real:+.6f} {lz.imag:+.6f}i")
