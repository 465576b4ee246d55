"""Exhaustive checks on small cubes.

Enumerates every m-subset of Q_4 to find the smallest boundary, and every
small cut of Q_4 and Q_5 to confirm the first two extra-connectivity values.
Run with: python3 demos/04_oracles.py
"""

import time

from hqx import isoperimetry as iso
from hqx import oracle

# %% Minimum boundary by brute force vs. the cascade formula
n = 4
for m in range(1, 1 << n):
    res = oracle.min_boundary_bruteforce(n, m)
    print(f"m={m:2d}  brute={res.value:2d}  cascade={iso.min_boundary(n, m):2d}"
          f"  subsets={res.explored}")

# %% Smallest cuts that leave only large pieces
for n, k in ((4, 0), (4, 1), (5, 0), (5, 1)):
    t = time.perf_counter()
    res = oracle.extra_conn_bruteforce(n, k)
    print(f"kappa_{k}(Q_{n}) = {res.value}  ({time.perf_counter() - t:.2f}s)")
