"""What a faulty hypercube looks like below the isoperimetric threshold.

If fewer than b_v(h) vertices fail, one giant component survives and the
rest together hold at most f(h) vertices.  This script checks that on a
hand-built fault set and on randomized trials.
Run with: python3 demos/03_fault_structure.py
"""

from hqx import hypercube as hc
from hqx import isoperimetry as iso
from hqx import oracle
from hqx import reliability as rel

n, h = 7, 9

# %% Delete the neighborhood of a small star: the star is cut off
star = iso.witness_set(n, 8).vertices
faults = hc.vertex_boundary(n, star)
v = rel.structure_check(n, h, faults)
print(f"|S|={v.fault_size} < b_v({h})={v.threshold}")
print(f"components: {v.profile.sizes}")
print(f"outside the giant: {v.small_total} <= f({h}) = {v.bound}: {v.passed}")

# %% Random failures of the same size rarely strand anything
rep = oracle.structure_trials(n, h, 2000, seed=1)
print(f"\nuniform:     worst={rep.worst_small_total} violations={rep.violations}")

# %% Neighborhood-based failures push right up to the bound
rep = oracle.adversarial_trials(n, h, 2000, seed=1)
print(f"adversarial: worst={rep.worst_small_total} tight hits={rep.tight_hits} "
      f"violations={rep.violations}")
