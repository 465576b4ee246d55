"""Minimum vertex-boundary numbers of hypercubes.

``b_v(m; Q_n)`` is the least number of vertices outside an ``m``-vertex
subset of Q_n that are adjacent to it.  Harper's theorem gives it exactly
through a cascade of binomial coefficients:

    m  = C(n, n) + ... + C(n, r+1) + m'            0 < m' <= C(n, r)
    m' = C(m_r, r) + C(m_{r-1}, r-1) + ... + C(m_s, s)
                                                  1 <= s <= m_s < ... < m_r
    b_v(m; Q_n) = C(n, r) - m' + sum_j C(m_j, j-1)

Everything here is exact integer arithmetic.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import lru_cache
from math import comb
from typing import NamedTuple

from . import hypercube as hc
from .errors import DomainError, RangeError


class Source(str, enum.Enum):
    CASCADE = "cascade"
    CLOSED_FORM = "closed_form"


@dataclass(frozen=True)
class CascadeRep:
    n: int
    m: int
    r: int
    s: int
    m_prime: int
    terms: tuple[tuple[int, int], ...]  # (j, m_j) for j = s..r

    def coefficient(self, j):
        """``m_j``, or None when ``j`` lies below ``s`` or above ``r``."""
        if self.s <= j <= self.r:
            return self.terms[j - self.s][1]
        return None

    def value(self):
        """Rebuild ``m`` from the representation fields alone."""
        tail = sum(comb(self.n, i) for i in range(self.r + 1, self.n + 1))
        return tail + sum(comb(mj, j) for j, mj in self.terms)


class BoundaryValue(NamedTuple):
    value: int
    source: Source


def _check_order(n, m):
    hc.check_dim(n, cap=None)
    if not isinstance(m, int) or isinstance(m, bool) or not 1 <= m < (1 << n):
        raise DomainError(f"order m={m!r} is outside 1..2^{n}-1")


def _largest_lower(j, remainder):
    """Largest x >= j with C(x, j) <= remainder (remainder >= 1)."""
    lo, hi = j, j + 1
    while comb(hi, j) <= remainder:
        lo, hi = hi, 2 * hi
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if comb(mid, j) <= remainder:
            lo = mid
        else:
            hi = mid
    return lo


@lru_cache(maxsize=65536)
def cascade_decompose(n, m) -> CascadeRep:
    """Unique cascade representation of ``m`` relative to dimension ``n``.

    ``r`` is fixed by the position of ``m`` among the cumulative sums of
    ``C(n, n), C(n, n-1), ...``; the remainder ``m'`` is then expanded
    greedily, taking at each ``j = r, r-1, ...`` the largest ``m_j`` with
    ``C(m_j, j)`` not exceeding what is left.  The greedy choice keeps each
    leftover below ``C(m_j, j-1)``, which forces ``m_{j-1} < m_j``.
    """
    _check_order(n, m)
    tail = 0
    r = n
    while m > tail + comb(n, r):
        tail += comb(n, r)
        r -= 1
    m_prime = m - tail
    remainder = m_prime
    terms = []
    j = r
    while remainder:
        mj = _largest_lower(j, remainder)
        terms.append((j, mj))
        remainder -= comb(mj, j)
        j -= 1
    terms.reverse()
    return CascadeRep(n, m, r, terms[0][0], m_prime, tuple(terms))


def cascade_candidates(n, m) -> list[CascadeRep]:
    """Every tuple satisfying the cascade constraints for ``m``.

    Exhaustive search over ``r``, ``s`` and strictly increasing
    coefficient sequences; exponential in ``n`` and intended for checking
    uniqueness on small cubes only.
    """
    from itertools import combinations

    _check_order(n, m)
    found = []
    tail = 0
    for r in range(n, -1, -1):
        m_prime = m - tail
        if r >= 1 and 0 < m_prime <= comb(n, r):
            for s in range(1, r + 1):
                width = r - s + 1
                # m_s >= s and m_r <= n since C(m_r, r) <= C(n, r)
                for seq in combinations(range(s, n + 1), width):
                    if sum(comb(x, s + k) for k, x in enumerate(seq)) == m_prime:
                        terms = tuple((s + k, x) for k, x in enumerate(seq))
                        found.append(CascadeRep(n, m, r, s, m_prime, terms))
        tail += comb(n, r)
    return found


@lru_cache(maxsize=65536)
def min_boundary(n, m) -> int:
    """``b_v(m; Q_n)`` as a plain integer."""
    rep = cascade_decompose(n, m)
    return (
        comb(n, rep.r)
        - rep.m_prime
        + sum(comb(mj, j - 1) for j, mj in rep.terms)
    )


def boundary_cascade(n, m) -> BoundaryValue:
    """``b_v(m; Q_n)`` evaluated from the cascade representation."""
    return BoundaryValue(min_boundary(n, m), Source.CASCADE)


# Closed-form rows for 1 <= m <= 6n-15.  Rows 2..7 read
#   2 * b_v = -m^2 + A(n) * m + B(n)
# on the interval [lo(n), hi(n)].
_ROWS = (
    (lambda n: 1, lambda n: 1, None, None),
    (lambda n: 2, lambda n: n + 1,
     lambda n: 2 * n - 1, lambda n: 2),
    (lambda n: n + 2, lambda n: 2 * n - 1,
     lambda n: 4 * n - 3, lambda n: -2 * n * n + 4),
    (lambda n: 2 * n, lambda n: 3 * n - 3,
     lambda n: 6 * n - 7, lambda n: -6 * n * n + 8 * n + 4),
    (lambda n: 3 * n - 2, lambda n: 4 * n - 6,
     lambda n: 8 * n - 13, lambda n: -12 * n * n + 30 * n - 8),
    (lambda n: 4 * n - 5, lambda n: 5 * n - 10,
     lambda n: 10 * n - 21, lambda n: -20 * n * n + 72 * n - 48),
    (lambda n: 5 * n - 9, lambda n: 6 * n - 15,
     lambda n: 12 * n - 31, lambda n: -30 * n * n + 140 * n - 138),
)

CLOSED_FORM_ROWS = len(_ROWS)


def closed_form_interval(n, row):
    """Inclusive ``(lo, hi)`` of closed-form row ``row`` (1-based) for Q_n."""
    lo, hi, _, _ = _ROWS[row - 1]
    return lo(n), hi(n)


def closed_form_row(n, m):
    """Row index licensing ``m`` for Q_n, or None.

    A row applies only when its interval is nonempty for this ``n``, holds
    ``m``, and ``m`` is a valid order of Q_n.
    """
    if not 1 <= m < (1 << n) or m > max(1, 6 * n - 15):
        return None
    for row in range(1, CLOSED_FORM_ROWS + 1):
        lo, hi = closed_form_interval(n, row)
        if lo <= hi and lo <= m <= hi:
            return row
    return None


def boundary_closed_form(n, m) -> BoundaryValue:
    hc.check_dim(n, cap=None)
    row = closed_form_row(n, m)
    if row is None:
        raise RangeError(
            f"no closed-form row covers m={m} for n={n}; use boundary_cascade"
        )
    if row == 1:
        return BoundaryValue(n, Source.CLOSED_FORM)
    _, _, a, b = _ROWS[row - 1]
    twice = -m * m + a(n) * m + b(n)
    assert twice % 2 == 0
    return BoundaryValue(twice // 2, Source.CLOSED_FORM)


def compare_cascade(a: CascadeRep, b: CascadeRep) -> int:
    """Order two representations without reconstructing the integers.

    Returns -1 when ``a.m < b.m`` and 1 when ``a.m > b.m``: a smaller ``r``
    means a larger integer; for equal ``r`` the topmost differing
    coefficient decides, a missing coefficient counting as smaller than
    any present one.
    """
    if a.n != b.n:
        raise DomainError("cannot compare representations of different cubes")
    if a.m == b.m:
        raise DomainError("compare_cascade needs two different integers")
    if a.r != b.r:
        return -1 if a.r > b.r else 1
    for j in range(a.r, 0, -1):
        x = a.coefficient(j)
        y = b.coefficient(j)
        x = -1 if x is None else x
        y = -1 if y is None else y
        if x != y:
            return -1 if x < y else 1
    raise AssertionError("distinct integers with identical representations")


@dataclass(frozen=True)
class IdentityCheck:
    """Outcome of one checked claim about the boundary sequence of Q_n."""

    claim: str
    n: int
    param: int
    orders: tuple[int, ...]
    values: tuple[int, ...]
    passed: bool


def _tri(i):
    return i * (i - 1) // 2


def _plateau_licensed(n, i, k):
    lo, _ = closed_form_interval(n, i + 1)
    _, hi = closed_form_interval(n, i + 2)
    return lo <= k - 2 and k + 1 <= hi


def plateau_identities(n) -> list[IdentityCheck]:
    """Check the plateau, strict-run and jump identities for Q_n.

    With ``k_i = i*n - i(i-1)/2`` for ``i = 1..5``:

    * plateau: ``b(k_i - 1) = b(k_i) = b(k_i - 2) + 1 = b(k_i + 1) + 1``,
      checked only when the four orders fall in closed-form rows ``i+1``
      and ``i+2`` (equivalently ``n >= i + 2``); below that the chain
      leaves the rows it is read from and does not hold;
    * strict runs: ``b(m) < b(m+1)`` on the six intervals ending at
      ``n-2, 2n-3, 3n-5, 4n-8, 5n-12, 6n-17``;
    * jump: ``b(k_i + 2) > b(k_i)`` whenever ``n - i >= 4``.
    """
    hc.check_dim(n, cap=None)
    if n < 5:
        raise RangeError(f"plateau identities are stated for n >= 5, got {n}")
    b = lambda m: min_boundary(n, m)  # noqa: E731
    out = []
    for i in range(1, 6):
        k = i * n - _tri(i)
        if not _plateau_licensed(n, i, k):
            continue
        orders = (k - 1, k, k - 2, k + 1)
        vals = tuple(b(x) for x in orders)
        ok = vals[0] == vals[1] == vals[2] + 1 == vals[3] + 1
        out.append(IdentityCheck("plateau", n, i, orders, vals, ok))
    runs = (
        (1, n - 2), (n + 1, 2 * n - 3), (2 * n, 3 * n - 5),
        (3 * n - 2, 4 * n - 8), (4 * n - 5, 5 * n - 12), (5 * n - 9, 6 * n - 17),
    )
    for idx, (lo, hi) in enumerate(runs, start=1):
        if lo > hi:
            continue
        orders = tuple(range(lo, hi + 2))
        vals = tuple(b(x) for x in orders)
        ok = all(x < y for x, y in zip(vals, vals[1:]))
        out.append(IdentityCheck("strict_run", n, idx, orders, vals, ok))
    for i in range(1, 6):
        if n - i < 4:
            continue
        k = i * n - _tri(i)
        orders = (k + 2, k)
        vals = (b(k + 2), b(k))
        out.append(IdentityCheck("jump", n, i, orders, vals, vals[0] > vals[1]))
    return out


def dimension_difference(n, h) -> int:
    """``b_v(h; Q_n) - b_v(h-1; Q_{n-1})`` for ``n >= 5``, ``2 <= h <= 2n-1``.

    The result is ``n-1`` up to ``h = n+1`` and ``h-2`` beyond.
    """
    hc.check_dim(n, cap=None)
    if n < 5:
        raise RangeError(f"dimension differences are stated for n >= 5, got {n}")
    if not 2 <= h <= 2 * n - 1:
        raise RangeError(f"h={h} is outside 2..{2 * n - 1}")
    return min_boundary(n, h) - min_boundary(n - 1, h - 1)


class Family(str, enum.Enum):
    STAR = "star"
    STAR2 = "star2"
    STAR3 = "star3"


@dataclass(frozen=True)
class WitnessSet:
    n: int
    m: int
    family: Family
    vertices: hc.FaultSet


def witness_family(n, m) -> Family:
    if not 1 <= m <= 3 * n - 2:
        raise RangeError(f"witness order m={m} is outside 1..{3 * n - 2}")
    if m <= n + 1:
        return Family.STAR
    if m <= 2 * n:
        return Family.STAR2
    return Family.STAR3


def _nb(*dims):
    """Label reached from 0^n by flipping the given 1-indexed dimensions."""
    v = 0
    for d in dims:
        v ^= 1 << (d - 1)
    return v


def witness_labels(n, m) -> list[int]:
    """Labels of the order-``m`` extremal set rooted at ``u = 0^n``.

    star:  u, u^1, ..., u^(m-1)
    star2: u, all u^i, then u^12, u^13, ..., u^1(m-n)
    star3: u, all u^i, all u^1j (j = 2..n), then u^2n, u^3n, ..., u^kn
           with k = m + 1 - 2n
    """
    family = witness_family(n, m)
    labels = [0]
    if family is Family.STAR:
        labels += [_nb(i) for i in range(1, m)]
        return labels
    labels += [_nb(i) for i in range(1, n + 1)]
    if family is Family.STAR2:
        labels += [_nb(1, j) for j in range(2, m - n + 1)]
        return labels
    labels += [_nb(1, j) for j in range(2, n + 1)]
    k = m + 1 - 2 * n
    labels += [_nb(i, n) for i in range(2, k + 1)]
    return labels


def witness_set(n, m) -> WitnessSet:
    """Connected order-``m`` vertex set whose boundary is minimum.

    Defined for ``1 <= m <= 3n - 2``.  For the star family the boundary has
    ``(n-m+1) + (n-1)(m-1) - C(m-1, 2)`` vertices.
    """
    hc.check_dim(n)
    family = witness_family(n, m)
    labels = witness_labels(n, m)
    vs = hc.FaultSet.from_vertices(n, labels)
    assert vs.size == m
    return WitnessSet(n, m, family, vs)


def star_boundary_size(n, m):
    """Boundary size of the star witness, counted via shared neighbors."""
    return (n - m + 1) + (n - 1) * (m - 1) - comb(m - 1, 2)
