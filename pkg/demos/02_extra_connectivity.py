"""h-extra connectivity of Q_n.

Tabulates kappa_{h-1}(Q_n), shows which orders are not covered by a formula
row, and rebuilds an extremal cut to see the two sides it leaves behind.
Run with: python3 demos/02_extra_connectivity.py
"""

from hqx import hypercube as hc
from hqx import reliability as rel

# %% Full tables for a few dimensions
for n in (5, 7, 9):
    table = rel.extra_conn_table(n)
    print(f"n={n}:", " ".join(str(e.value) for e in table))
    gaps = rel.extra_conn_gaps(n)
    if gaps:
        print(f"      orders without a formula row: h = {gaps}")

# %% One entry in detail
e = rel.extra_connectivity(9, 12)
print(f"\nkappa_{e.h_minus_1}(Q_9) = {e.value} via {e.formula_row.name}")

# %% The cut that realizes it
witness, cut = rel.extremal_cut(9, 12)
prof = hc.components(9, cut)
print(f"removing {cut.size} vertices leaves components of sizes {prof.sizes}")
