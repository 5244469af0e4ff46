"""The argument S(t), its antiderivative S1(t), and two consistency checks.

S(t) jumps by the zero multiplicity at each ordinate; together with the
smooth theta term it reconstructs the exact zero count.  S1 computed
directly and via the horizontal-integral route agree up to a constant
plus a tiny oscillation from the far half-plane.
"""
import math

import numpy as np

from bsylab import (DEFAULT, S1_direct, S1_littlewood, S_of_t,
                    find_zeros_up_to, rs_theta)

zeros = find_zeros_up_to(120.0, DEFAULT)

print("zero-count reconstruction: N(t) = theta(t)/pi + 1 + S(t)")
for t in (25.0, 50.0, 100.0):
    s = S_of_t(t, DEFAULT)
    n = rs_theta(t) / math.pi + 1.0 + s
    exact = int(np.sum(zeros.ordinates <= t))
    print(f"  t={t:6.1f}  S={s:+.6f}  reconstructed N={n:9.6f}"
          f"  exact {exact}")

print()
print("S1 two ways (difference = constant + bounded oscillation, no drift)")
for t in (30.0, 60.0, 90.0):
    d = S1_direct(t, zeros, DEFAULT)
    lw = S1_littlewood(t, DEFAULT)
    print(f"  t={t:5.1f}  direct={d:+.8f}  littlewood={lw:+.8f}"
          f"  diff={d - lw:+.8f}")
