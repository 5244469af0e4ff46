"""Locate, verify, and cache nontrivial zeros on the critical line.

Zeros are bracketed by sign changes of the Hardy Z function, polished to
full precision, and double-checked against the counting function so none
are missed.
"""
from bsylab import (DEFAULT, count_zeros, export_zeros, find_zeros_up_to,
                    import_zeros, verify_zero_list)

height = 100.0
zs = find_zeros_up_to(height, DEFAULT)
print(f"{len(zs)} zeros below t = {height:g}")
for g in zs.ordinates[:5]:
    print(f"  {g:.12f}")
print("  ...")

verified = verify_zero_list(zs, DEFAULT)
print(f"verified against the counting function: {verified.verified}")
print(f"count_zeros({height:g}) = {count_zeros(height, DEFAULT)} "
      f"(list holds {len(zs)})")

path = "/tmp/demo_zeros.txt"
export_zeros(zs, path)
back = import_zeros(path)
print(f"cache round-trip: {len(back)} zeros, "
      f"covered height {back.covered_height:.6f}")
