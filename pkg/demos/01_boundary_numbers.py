"""Smallest vertex boundaries in Q_n.

Walks through the cascade representation of m, the resulting minimum
boundary size b_v(m; Q_n), and the quadratic shortcut that covers small m.
Run with: python3 demos/01_boundary_numbers.py
"""

from hqx import isoperimetry as iso
from hqx import hypercube as hc

n = 7

# %% Cascade representation of a few set sizes
for m in (1, 8, 9, 29, 30, 64):
    rep = iso.cascade_decompose(n, m)
    print(f"m={m:3d}  r={rep.r}  m'={rep.m_prime:3d}  terms={rep.terms}")

# %% b_v for m = 1..3n, with the closed form alongside
print("\n  m  cascade  closed")
for m in range(1, 3 * n + 1):
    bv = iso.boundary_cascade(n, m).value
    row = iso.closed_form_row(n, m)
    closed = iso.boundary_closed_form(n, m).value if row is not None else None
    print(f"{m:3d}  {bv:7d}  {closed if closed is not None else 'n/a':>6}")

# %% b_v is not monotone: it climbs after n-2 and falls back at n+1
# (and again after 2n-3, back at 2n), which flattens the running minimum
for lo in (n - 2, 2 * n - 3):
    vals = [iso.min_boundary(n, m) for m in range(lo, lo + 4)]
    print(f"\nb_v over m={lo}..{lo + 3}: {vals}")

# %% A concrete set that attains the bound
w = iso.witness_set(n, 2 * n)
bd = hc.vertex_boundary(n, w.vertices)
print(f"\nwitness {w.family.value} with {w.vertices.size} vertices has boundary {bd.size}")
