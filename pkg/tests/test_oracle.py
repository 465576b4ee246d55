from itertools import combinations

import numpy as np
import pytest

from hqx import hypercube as hc
from hqx import isoperimetry as iso
from hqx import oracle
from hqx.errors import BudgetExceeded, DomainError, RangeError


@pytest.mark.parametrize("size,k", [(6, 3), (10, 4), (12, 1), (9, 9)])
def test_subset_masks_lexicographic(size, k):
    got = np.concatenate(list(oracle.subset_masks(size, k, chunk=5))).tolist()
    expected = [sum(1 << i for i in c) for c in combinations(range(size), k)]
    assert got == expected


def test_min_boundary_examples():
    assert oracle.min_boundary_bruteforce(2, 1).value == 2
    res = oracle.min_boundary_bruteforce(3, 4)
    assert res.value == 3 and res.explored == 70
    assert res.witness.vertices() == [0b000, 0b001, 0b010, 0b100]
    res = oracle.min_boundary_bruteforce(4, 5)
    assert res.value == 6 == iso.min_boundary(4, 5)
    assert res.explored == 4368


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_min_boundary_agrees_with_cascade(n):
    for m in range(1, 1 << n):
        res = oracle.min_boundary_bruteforce(n, m)
        assert res.value == iso.min_boundary(n, m)
        # the witness re-certifies with hypercube operations alone
        assert res.witness.size == m
        assert hc.vertex_boundary(n, res.witness).size == res.value


def test_min_boundary_witness_is_lexicographically_first():
    n, m = 3, 2
    best = min(
        (hc.vertex_boundary(n, c).size, c) for c in combinations(range(8), m)
    )
    assert tuple(oracle.min_boundary_bruteforce(n, m).witness.vertices()) == best[1]


def test_budget():
    with pytest.raises(BudgetExceeded) as err:
        oracle.min_boundary_bruteforce(5, 10, budget=10**6)
    assert err.value.budget == 10**6
    with pytest.raises(BudgetExceeded):
        oracle.extra_conn_bruteforce(5, 1, budget=10**5)


def test_domain():
    with pytest.raises(DomainError):
        oracle.min_boundary_bruteforce(7, 1)
    with pytest.raises(DomainError):
        oracle.min_boundary_bruteforce(3, 8)
    with pytest.raises(DomainError):
        oracle.extra_conn_bruteforce(3, -1)


def test_extra_conn_examples():
    res = oracle.extra_conn_bruteforce(4, 0)
    assert res.value == 4
    res = oracle.extra_conn_bruteforce(4, 1)
    assert res.value == 6
    prof = hc.components(4, res.witness)
    assert len(prof.sizes) >= 2 and min(prof.sizes) >= 2


def test_extra_conn_not_found():
    res = oracle.extra_conn_bruteforce(3, 0, max_k=2)
    assert res.value is None and res.witness is None


def test_extra_conn_q3_matches_networkx(cube):
    import networkx as nx

    g = cube(3)
    assert oracle.extra_conn_bruteforce(3, 0).value == nx.node_connectivity(g) == 3


def test_uniform_trials():
    rep = oracle.structure_trials(5, 1, 1000, 42)
    assert rep.violations == 0 and rep.worst_small_total == 0
    rep = oracle.structure_trials(5, 2, 2000, 7)
    assert rep.passed and rep.worst_small_total <= 1


def test_adversarial_trials_reach_bound():
    rep = oracle.adversarial_trials(5, 2, 1000, 1)
    assert rep.passed
    rep = oracle.adversarial_trials(7, 9, 1000, 1)
    assert rep.passed and rep.worst_small_total == rep.bound == 8
    rep = oracle.adversarial_trials(7, 14, 1000, 3)
    assert rep.passed and rep.worst_small_total <= rep.bound == 10


def test_trial_sizes_stay_below_threshold():
    for sampler in (oracle._uniform_faults, oracle._adversarial_faults):
        for t in range(300):
            bits = sampler(7, 9, oracle.trial_rng(5, t))
            assert bits.bit_count() < iso.min_boundary(7, 9)


def test_trials_deterministic_across_workers():
    a = oracle.adversarial_trials(7, 9, 300, 11, workers=1)
    b = oracle.adversarial_trials(7, 9, 300, 11, workers=4)
    c = oracle.adversarial_trials(7, 9, 300, 11, workers=8)
    assert a == b == c
    assert oracle.adversarial_trials(7, 9, 300, 12) != a


def test_trial_guards():
    with pytest.raises(RangeError):
        oracle.structure_trials(5, 7, 10, 0)
    with pytest.raises(DomainError):
        oracle.structure_trials(4, 1, 10, 0)
    with pytest.raises(DomainError):
        oracle.structure_trials(5, 1, 10, -1)
