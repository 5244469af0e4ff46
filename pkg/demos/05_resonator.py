"""Resonator construction and the signed resonance ratios.

A resonator is a multiplicative coefficient table supported on
squarefree products of primes from a window (A, B].  Its plus/minus
variants push a Lambda-weighted sum positive or negative — the
engine behind omega-results for the argument.
"""
from bsylab import (ResonatorParams, build_resonator, lemma4_check,
                    resonator_denominator, resonator_numerator, solve_L)

N, nu = 10 ** 6, 0
L = solve_L(N, nu)
print(f"solved scale L = {L:.6f} for N = {N:g}, nu = {nu}")

params = ResonatorParams(mu=2, nu=0, N=100, h=0.1, L=1.0, A=2.0, B=30.0,
                         override=True)
table = build_resonator(params, "plus")
print(f"\ntoy table: {table.ns.size} squarefree entries up to N={params.N}")
for n, r in zip(table.ns[:8].tolist(), table.rs[:8].tolist()):
    print(f"  r({n:3d}) = {r:+.6f}")
print("  ...")

num = resonator_numerator(table)
den = resonator_denominator(table)
print(f"\nplus variant: numerator={num:+.6f}  denominator={den:.6f}"
      f"  ratio={num / den:+.6f}")

chk = lemma4_check(params)
print("both variants (signs must be + and -):")
print(f"  ratio_plus  = {chk['ratio_plus']:+.6f}"
      f"   normalized {chk['normalized_plus']:+.4f}")
print(f"  ratio_minus = {chk['ratio_minus']:+.6f}"
      f"   normalized {chk['normalized_minus']:+.4f}")
