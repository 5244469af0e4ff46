"""The weighted critical-line integral I(T) and its decay toward zero.

I(T) integrates log|zeta(1/2+it)| against the Cauchy weight 1/(1/4+t^2)
over [-T, T].  The Riemann Hypothesis is equivalent to I(T) -> 0; here we
compute it on a doubling ladder, watch it shrink, and fit the decay
shape log(T)/T^2 against a free power law.
"""
import numpy as np

from bsylab import DEFAULT, compute_I_many, find_zeros_up_to, fit_decay

ladder = [10.0 * 2 ** k for k in range(8)]   # 10 .. 1280
zeros = find_zeros_up_to(ladder[-1] + 10.0, DEFAULT)
print(f"zero list to {zeros.covered_height:.1f} "
      f"({len(zeros)} ordinates)")

results = compute_I_many(ladder, zeros, DEFAULT)
print(f"{'T':>6}  {'I(T)':>15}  {'abs err':>9}  {'zeros handled':>13}")
for T, r in zip(ladder, results):
    print(f"{T:6.0f}  {r.value:15.6e}  {r.abs_error_est:9.2e}"
          f"  {r.singularities_handled:13d}")

samples = np.column_stack([ladder, [r.value for r in results]])
for model in ("pure_power", "logT_over_T2"):
    rep = fit_decay(samples, model)
    print(f"fit {model:13s}: params={np.round(rep.fitted_params, 4)}"
          f"  residual rms={rep.residual_rms:.4f}  flags={rep.flags}")
