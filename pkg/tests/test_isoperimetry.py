from itertools import combinations
from math import comb

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hqx import hypercube as hc
from hqx import isoperimetry as iso
from hqx.errors import DomainError, RangeError


def brute_min_boundary(g, m):
    return min(len(nx.node_boundary(g, H)) for H in combinations(g.nodes, m))


class TestCascade:
    def test_examples(self):
        rep = iso.cascade_decompose(4, 1)
        assert (rep.r, rep.m_prime, rep.s, rep.terms) == (4, 1, 4, ((4, 4),))
        rep = iso.cascade_decompose(5, 6)
        assert (rep.r, rep.m_prime, rep.s, rep.terms) == (4, 5, 4, ((4, 5),))
        rep = iso.cascade_decompose(4, 7)
        assert (rep.r, rep.m_prime, rep.s, rep.terms) == (2, 2, 1, ((1, 1), (2, 2)))

    def test_rejects_out_of_range(self):
        for m in (0, 16, -3):
            with pytest.raises(DomainError):
                iso.cascade_decompose(4, m)

    @pytest.mark.parametrize("n", range(1, 8))
    def test_unique_by_exhaustive_search(self, n):
        for m in range(1, 1 << n):
            assert iso.cascade_candidates(n, m) == [iso.cascade_decompose(n, m)]

    @pytest.mark.parametrize("n", range(1, 21))
    def test_round_trip(self, n):
        for m in range(1, min((1 << n) - 1, 10**5) + 1, 1 if n < 17 else 7):
            rep = iso.cascade_decompose(n, m)
            assert rep.value() == m
            assert 0 < rep.m_prime <= comb(n, rep.r)
            coeffs = [mj for _, mj in rep.terms]
            assert rep.s <= coeffs[0]
            assert all(a < b for a, b in zip(coeffs, coeffs[1:]))

    def test_large_n_is_exact(self):
        n = 64
        m = (1 << 63) + 12345
        rep = iso.cascade_decompose(n, m)
        assert rep.value() == m
        assert iso.min_boundary(n, m) >= 0


class TestBoundary:
    def test_known_values(self):
        assert iso.boundary_cascade(5, 1).value == 5
        assert iso.boundary_cascade(5, 6).value == comb(5, 3)

    def test_bruteforce_values(self, cube):
        # frozen from brute_min_boundary over all C(8,4) and C(16,7) subsets
        assert brute_min_boundary(cube(3), 4) == 3
        assert iso.boundary_cascade(3, 4).value == 3
        assert iso.boundary_cascade(4, 7).value == 7

    @pytest.mark.slow
    def test_q4_order7_bruteforce(self, cube):
        assert brute_min_boundary(cube(4), 7) == 7

    @pytest.mark.parametrize("n", [2, 3])
    def test_all_orders_against_networkx(self, n, cube):
        for m in range(1, 1 << n):
            assert iso.min_boundary(n, m) == brute_min_boundary(cube(n), m)

    def test_closed_form_examples(self, cube):
        # n=5, m=2: (-4 + 9*2 + 2) / 2
        assert iso.boundary_closed_form(5, 2).value == 8
        assert brute_min_boundary(cube(5), 2) == 8
        assert iso.boundary_closed_form(5, 10).value == 12
        assert iso.boundary_closed_form(7, 11).value == 30
        assert iso.boundary_closed_form(9, 7).value == (81 - 9) // 2

    def test_closed_form_gates(self):
        with pytest.raises(RangeError):
            iso.boundary_closed_form(5, 16)  # beyond 6n-15
        with pytest.raises(RangeError):
            iso.boundary_closed_form(6, 22)
        assert iso.closed_form_row(6, 21) == 7
        assert iso.closed_form_row(5, 15) == 6
        assert iso.closed_form_row(5, 16) is None

    @pytest.mark.parametrize("n", range(3, 31))
    def test_closed_form_agrees(self, n):
        for m in range(1, 6 * n - 14):
            if iso.closed_form_row(n, m) is not None:
                assert iso.boundary_closed_form(n, m).value == iso.min_boundary(n, m)

    @pytest.mark.parametrize("n", range(6, 21))
    def test_non_monotone(self, n):
        b = lambda m: iso.min_boundary(n, m)  # noqa: E731
        assert b(n + 1) < b(n)
        assert b(2 * n) < b(2 * n - 1)


class TestCompare:
    def test_examples(self):
        a, b = iso.cascade_decompose(5, 6), iso.cascade_decompose(5, 7)
        assert (a.r, b.r) == (4, 3)
        assert iso.compare_cascade(a, b) == -1
        a, b = iso.cascade_decompose(6, 9), iso.cascade_decompose(6, 10)
        assert a.r == b.r == 4
        assert iso.compare_cascade(a, b) == -1
        assert iso.compare_cascade(b, a) == 1

    def test_rejects(self):
        a = iso.cascade_decompose(4, 7)
        with pytest.raises(DomainError):
            iso.compare_cascade(a, a)
        with pytest.raises(DomainError):
            iso.compare_cascade(a, iso.cascade_decompose(5, 8))

    @pytest.mark.parametrize("n", range(1, 9))
    def test_all_pairs(self, n):
        reps = [iso.cascade_decompose(n, m) for m in range(1, 1 << n)]
        for a, b in combinations(reps, 2):
            assert iso.compare_cascade(a, b) == -1
            assert iso.compare_cascade(b, a) == 1

    @settings(max_examples=500, deadline=None)
    @given(st.data())
    def test_sampled_pairs(self, data):
        n = data.draw(st.integers(9, 12))
        m = data.draw(st.integers(1, (1 << n) - 1))
        M = data.draw(st.integers(1, (1 << n) - 1).filter(lambda x: x != m))
        expect = -1 if m < M else 1
        got = iso.compare_cascade(iso.cascade_decompose(n, m), iso.cascade_decompose(n, M))
        assert got == expect


class TestIdentities:
    def test_plateau_examples(self):
        b = lambda n, m: iso.min_boundary(n, m)  # noqa: E731
        assert b(7, 6) == b(7, 7) == 22 == b(7, 5) + 1 == b(7, 8) + 1
        assert b(5, 9) == b(5, 8) == 13 == b(5, 7) + 1 == b(5, 10) + 1
        checks = iso.plateau_identities(7)
        first = [c for c in checks if c.claim == "plateau" and c.param == 1][0]
        assert first.values == (22, 22, 21, 21) and first.passed

    @pytest.mark.parametrize("n", range(5, 41))
    def test_all_claims_pass(self, n):
        checks = iso.plateau_identities(n)
        assert all(c.passed for c in checks)
        kinds = {c.claim for c in checks}
        assert kinds == {"plateau", "strict_run", "jump"}

    def test_unlicensed_plateaus_are_omitted(self):
        # the chain fails literally at (5, 4), (5, 5), (6, 5)
        b = lambda n, m: iso.min_boundary(n, m)  # noqa: E731
        assert b(5, 12) + 1 != b(5, 14)  # i=4, k=14
        params = {c.param for c in iso.plateau_identities(5) if c.claim == "plateau"}
        assert params == {1, 2, 3}
        params = {c.param for c in iso.plateau_identities(6) if c.claim == "plateau"}
        assert params == {1, 2, 3, 4}
        params = {c.param for c in iso.plateau_identities(7) if c.claim == "plateau"}
        assert params == {1, 2, 3, 4, 5}

    def test_jump_guard(self):
        jumps = {c.param for c in iso.plateau_identities(6) if c.claim == "jump"}
        assert jumps == {1, 2}

    def test_plateau_rejects_small_n(self):
        with pytest.raises(RangeError):
            iso.plateau_identities(4)

    def test_difference_examples(self):
        assert iso.dimension_difference(5, 2) == 4
        assert iso.dimension_difference(7, 9) == 7
        assert iso.min_boundary(6, 7) == 15 and iso.min_boundary(5, 6) == 10
        assert iso.dimension_difference(6, 7) == 5

    @pytest.mark.parametrize("n", range(5, 41))
    def test_differences(self, n):
        for h in range(2, 2 * n):
            expected = n - 1 if h <= n + 1 else h - 2
            assert iso.dimension_difference(n, h) == expected

    def test_difference_range(self):
        for h in (1, 10):
            with pytest.raises(RangeError):
                iso.dimension_difference(5, h)


class TestWitness:
    def test_examples(self):
        w = iso.witness_set(5, 1)
        assert w.vertices.vertices() == [0]
        assert hc.vertex_boundary(5, w.vertices).size == 5

        w = iso.witness_set(5, 3)
        assert w.family is iso.Family.STAR
        assert w.vertices.vertices() == [0, 1, 2]
        assert hc.vertex_boundary(5, w.vertices).size == 10 == iso.star_boundary_size(5, 3)

        w = iso.witness_set(5, 7)
        assert w.family is iso.Family.STAR2
        assert hc.vertex_boundary(5, w.vertices).size == 12

        w = iso.witness_set(7, 15)
        assert w.family is iso.Family.STAR3
        assert hc.vertex_boundary(7, w.vertices).size == 33 == iso.min_boundary(7, 15)

    def test_range(self):
        with pytest.raises(RangeError):
            iso.witness_set(5, 14)
        with pytest.raises(RangeError):
            iso.witness_set(5, 0)

    @pytest.mark.parametrize("n", range(5, 13))
    def test_tight_and_connected(self, n, cube):
        g = cube(n)
        for m in range(1, 3 * n - 1):
            w = iso.witness_set(n, m)
            assert w.vertices.size == m
            assert nx.is_connected(g.subgraph(w.vertices.vertices()))
            assert hc.vertex_boundary(n, w.vertices).size == iso.min_boundary(n, m)
            if w.family is iso.Family.STAR:
                assert iso.star_boundary_size(n, m) == iso.min_boundary(n, m)
