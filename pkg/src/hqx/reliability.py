"""Fault tolerance of Q_n derived from its minimum boundary numbers.

Three results are exposed:

* ``f_of_h`` bounds the total order of the small components of Q_n - S
  whenever ``|S| < b_v(h; Q_n)``;
* ``structure_check`` evaluates that guarantee on a concrete fault set;
* ``extra_connectivity`` gives the (h-1)-extra connectivity of Q_n, the
  least number of vertices whose removal disconnects the cube while leaving
  every component with at least h vertices.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from . import hypercube as hc
from .errors import PreconditionError, RangeError
from .isoperimetry import min_boundary


def _check_h(n, h):
    hc.check_dim(n, cap=None)
    if not isinstance(h, int) or isinstance(h, bool) or not 1 <= h <= 3 * n - 6:
        raise RangeError(f"h={h!r} is outside 1..3n-6 = 1..{3 * n - 6}")


def f_of_h(n, h) -> int:
    """Upper bound on the vertices outside the large component."""
    _check_h(n, h)
    if h <= n - 2:
        return h - 1
    if h in (n - 1, n):
        return n + 1
    if h == n + 1:
        return n
    if h <= 2 * n - 3:
        return h - 1
    if h in (2 * n - 2, 2 * n - 1, 2 * n + 1):
        return 2 * n
    if h == 2 * n:
        return 2 * n - 4
    return h - 1


def f_pieces(n):
    """The h-ranges of ``f_of_h`` as ``(lo, hi)`` pairs, in definition order.

    Empty pieces (``lo > hi``) are kept so callers can see where the
    definition degenerates for small ``n``.
    """
    return [
        (1, n - 2), (n - 1, n - 1), (n, n), (n + 1, n + 1),
        (n + 2, 2 * n - 3), (2 * n - 2, 2 * n - 2), (2 * n - 1, 2 * n - 1),
        (2 * n + 1, 2 * n + 1), (2 * n, 2 * n), (2 * n + 2, 3 * n - 6),
    ]


def structure_min_n(h, n):
    """Smallest dimension for which the structure bound at ``h`` is proved.

    The bound is assembled from results that need n >= 5 up to h = n+1,
    n >= 7 up to h = 2n+1 and n >= 9 beyond.
    """
    if h <= n + 1:
        return 5
    if h <= 2 * n + 1:
        return 7
    return 9


def structure_licensed(n, h):
    return 1 <= h <= 3 * n - 6 and n >= structure_min_n(h, n)


def check_structure_guard(n, h):
    _check_h(n, h)
    need = structure_min_n(h, n)
    if n < need:
        raise RangeError(
            f"the structure bound at h={h} is only proved for n >= {need}, got n={n}"
        )


@dataclass(frozen=True)
class StructureVerdict:
    n: int
    h: int
    fault_size: int
    threshold: int
    profile: hc.ComponentProfile
    bound: int
    passed: bool

    @property
    def small_total(self):
        return self.profile.small_total


def structure_check(n, h, S) -> StructureVerdict:
    """Check that Q_n - S has a large component plus at most f(h) others.

    ``S`` must be smaller than ``b_v(h; Q_n)``.  "Large component" means one
    maximum-order component (ties resolved by smallest label); every other
    component counts toward the small total.
    """
    check_structure_guard(n, h)
    hc.check_dim(n)
    S = hc.as_faultset(n, S)
    threshold = min_boundary(n, h)
    if S.size >= threshold:
        raise PreconditionError(
            f"|S|={S.size} is not below b_v({h}; Q_{n}) = {threshold}"
        )
    profile = hc.components(n, S)
    bound = f_of_h(n, h)
    ok = profile.count >= 1 and profile.small_total <= bound
    return StructureVerdict(n, h, S.size, threshold, profile, bound, ok)


class ExtraRow(int, enum.Enum):
    """The five h-ranges on which the extra connectivity is determined."""

    LOW = 1        # 1 <= h <= n-3,     n >= 5: b_v(h)
    PLATEAU1 = 2   # n-2 <= h <= n+1,   n >= 5: b_v(n-2)
    MID = 3        # n+2 <= h <= 2n-4,  n >= 7: b_v(h)
    PLATEAU2 = 4   # 2n-3 <= h <= 2n,   n >= 7: b_v(2n-3)
    HIGH = 5       # 2n+1 <= h <= 3n-6, n >= 9: b_v(h)


def _row_spec(n, row):
    """``(lo, hi, min_n, order)`` for a row; ``order`` None means ``h``."""
    return {
        ExtraRow.LOW: (1, n - 3, 5, None),
        ExtraRow.PLATEAU1: (n - 2, n + 1, 5, n - 2),
        ExtraRow.MID: (n + 2, 2 * n - 4, 7, None),
        ExtraRow.PLATEAU2: (2 * n - 3, 2 * n, 7, 2 * n - 3),
        ExtraRow.HIGH: (2 * n + 1, 3 * n - 6, 9, None),
    }[row]


@dataclass(frozen=True)
class ExtraConnEntry:
    n: int
    h_minus_1: int
    value: int
    formula_row: ExtraRow
    guard: str
    order: int  # the b_v order evaluated

    @property
    def h(self):
        return self.h_minus_1 + 1


def _licensing_row(n, h):
    for row in ExtraRow:
        lo, hi, min_n, _ = _row_spec(n, row)
        if lo <= h <= hi and n >= min_n:
            return row
    return None


def extra_connectivity(n, h_minus_1) -> ExtraConnEntry:
    """The (h-1)-extra connectivity of Q_n on the ranges where it is known.

    Raises RangeError for ``(n, h)`` outside every licensed row instead of
    extrapolating a formula.
    """
    hc.check_dim(n, cap=None)
    h = h_minus_1 + 1
    row = _licensing_row(n, h) if h >= 1 else None
    if row is None:
        raise RangeError(
            f"no licensed formula for the {h_minus_1}-extra connectivity of Q_{n}"
        )
    lo, hi, min_n, order = _row_spec(n, row)
    order = h if order is None else order
    guard = f"{lo} <= h <= {hi}, n >= {min_n}"
    return ExtraConnEntry(n, h_minus_1, min_boundary(n, order), row, guard, order)


def extra_conn_table(n) -> list[ExtraConnEntry]:
    """Licensed extra connectivities of Q_n for h = 1..3n-6, ascending h."""
    hc.check_dim(n, cap=None)
    if n < 5:
        raise RangeError(f"extra connectivity table needs n >= 5, got {n}")
    return [
        extra_connectivity(n, h - 1)
        for h in range(1, 3 * n - 5)
        if _licensing_row(n, h) is not None
    ]


def extra_conn_gaps(n) -> list[int]:
    """Values of h in 1..3n-6 that no row licenses for this n."""
    hc.check_dim(n, cap=None)
    if n < 5:
        raise RangeError(f"extra connectivity table needs n >= 5, got {n}")
    return [h for h in range(1, 3 * n - 5) if _licensing_row(n, h) is None]


def extremal_cut(n, h_minus_1) -> tuple[hc.FaultSet, hc.FaultSet]:
    """A witness set and its boundary realizing ``extra_connectivity``.

    The witness has the order designated by the row (``h``, ``n+1`` or
    ``2n``) and its boundary has exactly the returned connectivity value.
    """
    from .isoperimetry import witness_set

    entry = extra_connectivity(n, h_minus_1)
    size = {
        ExtraRow.PLATEAU1: n + 1,
        ExtraRow.PLATEAU2: 2 * n,
    }.get(entry.formula_row, entry.h)
    w = witness_set(n, size).vertices
    return w, hc.vertex_boundary(n, w)
