"""Ground-truth engines that do not rely on any closed-form result.

Exhaustive searches run over all k-subsets of V(Q_n) encoded as uint64
membership masks (so ``n <= 6``), in lexicographic order of the sorted
vertex labels, vectorized with numpy in bounded chunks.  The randomized
harness samples fault sets from a seeded generator and checks the
structure bound trial by trial.

Randomness contract: trial ``t`` of a run with seed ``seed`` draws from
``numpy.random.Generator(PCG64(SeedSequence(seed, spawn_key=(t,))))``.
Each trial owns its stream, so a report depends only on
``(n, h, trials, seed)`` and never on how trials are split over workers.
"""

from __future__ import annotations

import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import lru_cache
from math import comb

import numpy as np

from . import hypercube as hc
from .errors import BudgetExceeded, DomainError
from .isoperimetry import min_boundary, witness_set
from .reliability import check_structure_guard, f_of_h, structure_check

log = logging.getLogger(__name__)

DEFAULT_BUDGET = 20_000_000
MAX_ENUM_DIM = 6  # masks must fit in uint64
CHUNK = 1 << 20


@dataclass(frozen=True)
class OracleResult:
    n: int
    parameter: int
    value: int | None
    witness: hc.FaultSet | None
    explored: int


@dataclass(frozen=True)
class TrialReport:
    n: int
    h: int
    trials: int
    seed: int
    sampler: str
    bound: int
    violations: int
    worst_small_total: int
    tight_hits: int
    first_violation: tuple[int, ...] | None = None

    @property
    def passed(self):
        return self.violations == 0


# -- mask helpers ----------------------------------------------------------

@lru_cache(maxsize=None)
def _np_flips(n):
    return tuple(
        (np.uint64(mask), np.uint64(shift)) for mask, shift in hc._flip_masks(n)
    )


def _expand(x, n):
    out = x.copy()
    for mask, shift in _np_flips(n):
        out |= ((x >> shift) & mask) | ((x & mask) << shift)
    return out


def _lowest_bit(x):
    return x & (~x + np.uint64(1))


def _fill(seed, alive, n):
    """Vectorized flood fill of ``seed`` inside ``alive`` (row-wise)."""
    comp = seed & alive
    while True:
        grown = _expand(comp, n) & alive
        if np.array_equal(grown, comp):
            return comp
        comp = grown


def _popcount(x):
    return np.bitwise_count(x).astype(np.int64)


def _mask_to_faultset(n, mask):
    return hc.FaultSet(n, int(mask))


# -- lexicographic k-subsets ----------------------------------------------

def _block(start, size, k):
    """All k-subsets of ``start..size-1`` as masks, lexicographically."""
    masks = np.zeros(1, dtype=np.uint64)
    last = np.array([start - 1], dtype=np.int64)
    for t in range(1, k + 1):
        top = size - 1 - (k - t)  # leave room for the remaining picks
        counts = np.maximum(top - last, 0)
        total = int(counts.sum())
        parent = np.repeat(np.arange(len(masks)), counts)
        offsets = np.arange(total) - np.repeat(np.cumsum(counts) - counts, counts)
        elem = last[parent] + 1 + offsets
        masks = masks[parent] | (np.uint64(1) << elem.astype(np.uint64))
        last = elem
    return masks


def subset_masks(size, k, chunk=CHUNK):
    """Yield every k-subset of ``0..size-1`` as uint64 masks in chunks.

    Chunks arrive in lexicographic order and each chunk is itself sorted
    lexicographically, so concatenating them lists all subsets in order.
    """
    if size > 64:
        raise DomainError("subset masks are limited to 64 elements")

    def walk(prefix, start, k):
        if k == 0:
            yield np.array([prefix], dtype=np.uint64)
        elif comb(size - start, k) <= chunk:
            if comb(size - start, k):
                yield _block(start, size, k) | np.uint64(prefix)
        else:
            for first in range(start, size - k + 1):
                yield from walk(prefix | (1 << first), first + 1, k - 1)

    yield from walk(0, 0, k)


def _check_enum_dim(n):
    hc.check_dim(n)
    if n > MAX_ENUM_DIM:
        raise DomainError(
            f"exhaustive search supports n <= {MAX_ENUM_DIM}, got n={n}"
        )


# -- exhaustive searches ---------------------------------------------------

def min_boundary_bruteforce(n, m, budget=DEFAULT_BUDGET) -> OracleResult:
    """Minimum boundary over all m-subsets of V(Q_n), by enumeration.

    The witness is the lexicographically first minimizer.
    """
    _check_enum_dim(n)
    size = 1 << n
    if not isinstance(m, int) or not 1 <= m <= size - 1:
        raise DomainError(f"order m={m!r} is outside 1..{size - 1}")
    needed = comb(size, m)
    if needed > budget:
        raise BudgetExceeded(needed, budget)
    best = None
    best_mask = None
    for masks in subset_masks(size, m):
        bsize = _popcount(_expand(masks, n) & ~masks)
        i = int(np.argmin(bsize))
        if best is None or bsize[i] < best:
            best = int(bsize[i])
            best_mask = masks[i]
    return OracleResult(n, m, best, _mask_to_faultset(n, best_mask), needed)


def _accepting(masks, n, min_part):
    """Rows whose removal disconnects Q_n into parts of >= min_part vertices."""
    full = np.uint64(hc.full_bits(n))
    alive = full & ~masks
    first = _fill(_lowest_bit(alive), alive, n)
    ok = first != alive
    if min_part <= 1 or not ok.any():
        return ok
    rows = np.flatnonzero(ok)
    rest = alive[rows]
    good = np.ones(len(rows), dtype=bool)
    while True:
        live = rest != 0
        if not live.any():
            break
        comp = _fill(_lowest_bit(rest), rest, n)
        good &= ~live | (_popcount(comp) >= min_part)
        rest &= ~comp
    ok[rows] = good
    return ok


def extra_conn_bruteforce(n, h_minus_1, budget=DEFAULT_BUDGET, max_k=None) -> OracleResult:
    """Smallest (h-1)-extra vertex cut of Q_n, by enumeration.

    For k = 1, 2, ... every k-subset S is tried; S is accepted when
    Q_n - S is disconnected and every component has at least ``h_minus_1
    + 1`` vertices.  Returns the first k with an accepting set and the
    lexicographically first such set, or ``value=None`` when no cut exists
    up to ``max_k``.
    """
    _check_enum_dim(n)
    if not isinstance(h_minus_1, int) or h_minus_1 < 0:
        raise DomainError(f"h_minus_1 must be a nonnegative integer, got {h_minus_1!r}")
    size = 1 << n
    min_part = h_minus_1 + 1
    limit = size - 2 * min_part
    if max_k is not None:
        limit = min(limit, max_k)
    explored = 0
    for k in range(1, limit + 1):
        if explored + comb(size, k) > budget:
            raise BudgetExceeded(explored + comb(size, k), budget)
        for masks in subset_masks(size, k):
            ok = _accepting(masks, n, min_part)
            if ok.any():
                i = int(np.argmax(ok))
                explored += i + 1
                return OracleResult(
                    n, h_minus_1, k, _mask_to_faultset(n, masks[i]), explored
                )
            explored += len(masks)
        log.debug("no %d-extra cut of size %d in Q_%d", h_minus_1, k, n)
    return OracleResult(n, h_minus_1, None, None, explored)


# -- randomized structure harness -------------------------------------------

def trial_rng(seed, trial):
    """Generator for one trial; see the module docstring."""
    return np.random.Generator(
        np.random.PCG64(np.random.SeedSequence(seed, spawn_key=(trial,)))
    )


def _bits_of(labels):
    bits = 0
    for v in labels:
        bits |= 1 << v
    return bits


def _uniform_faults(n, h, rng):
    threshold = min_boundary(n, h)
    k = int(rng.integers(0, threshold))
    return _bits_of(rng.choice(1 << n, size=k, replace=False).tolist())


@lru_cache(maxsize=None)
def _witness_boundary(n, j):
    return tuple(hc.vertex_boundary(n, witness_set(n, j).vertices).vertices())


def _adversarial_faults(n, h, rng):
    """Random subset of a translated witness boundary, padded at random.

    The witness order j is uniform on 1..f(h)+1.  Half of the trials keep
    the whole boundary (capped below b_v(h; Q_n)); the rest keep a subset of
    uniformly random size.  Padding vertices are then added uniformly up to
    a total size below b_v(h; Q_n).
    """
    size = 1 << n
    cap = min_boundary(n, h) - 1
    j = int(rng.integers(1, f_of_h(n, h) + 2))
    shift = int(rng.integers(0, size))
    boundary = np.array(_witness_boundary(n, j), dtype=np.int64) ^ shift
    if rng.random() < 0.5:
        keep = len(boundary)
    else:
        keep = int(rng.integers(0, len(boundary) + 1))
    keep = min(keep, cap)
    kept = rng.choice(boundary, size=keep, replace=False).tolist()
    pad = int(rng.integers(0, cap - keep + 1))
    bits = _bits_of(kept)
    if pad:
        draw = rng.choice(size, size=min(size, pad + keep), replace=False).tolist()
        extra = [v for v in draw if not bits >> v & 1][:pad]
        bits |= _bits_of(extra)
    return bits


_SAMPLERS = {"uniform": _uniform_faults, "adversarial": _adversarial_faults}


def _run_block(n, h, seed, sampler, start, stop):
    draw = _SAMPLERS[sampler]
    bound = f_of_h(n, h)
    violations = worst = tight = 0
    first = None
    for t in range(start, stop):
        bits = draw(n, h, trial_rng(seed, t))
        verdict = structure_check(n, h, hc.FaultSet(n, bits))
        small = verdict.small_total
        worst = max(worst, small)
        tight += small == bound
        if not verdict.passed:
            violations += 1
            if first is None:
                first = (t, tuple(hc.FaultSet(n, bits).vertices()))
    return violations, worst, tight, first


def _check_trial_args(n, h, trials, seed):
    hc.check_dim(n)
    if not 5 <= n <= 16:
        raise DomainError(f"the trial harness supports 5 <= n <= 16, got n={n}")
    check_structure_guard(n, h)
    if trials < 0:
        raise DomainError("trial count must be nonnegative")
    if not 0 <= seed < 1 << 64:
        raise DomainError("seed must be a 64-bit nonnegative integer")


def _run_trials(n, h, trials, seed, sampler, workers):
    _check_trial_args(n, h, trials, seed)
    workers = max(1, int(workers))
    if workers == 1 or trials < 2:
        parts = [_run_block(n, h, seed, sampler, 0, trials)]
    else:
        edges = [trials * w // workers for w in range(workers + 1)]
        with ProcessPoolExecutor(max_workers=workers) as pool:
            futures = [
                pool.submit(_run_block, n, h, seed, sampler, a, b)
                for a, b in zip(edges, edges[1:])
                if b > a
            ]
            parts = [f.result() for f in futures]
    violations = sum(p[0] for p in parts)
    worst = max((p[1] for p in parts), default=0)
    tight = sum(p[2] for p in parts)
    firsts = [p[3] for p in parts if p[3] is not None]
    first = min(firsts)[1] if firsts else None
    return TrialReport(
        n, h, trials, seed, sampler, f_of_h(n, h), violations, worst, tight, first
    )


def structure_trials(n, h, trials, seed, workers=1) -> TrialReport:
    """Uniformly random fault sets below the ``b_v(h; Q_n)`` threshold.

    Each trial draws ``|S|`` uniformly from ``0..b_v(h)-1`` and then ``S``
    uniformly among subsets of that size.
    """
    return _run_trials(n, h, trials, seed, "uniform", workers)


def adversarial_trials(n, h, trials, seed, workers=1) -> TrialReport:
    """Fault sets biased toward boundaries of extremal witness sets."""
    return _run_trials(n, h, trials, seed, "adversarial", workers)
