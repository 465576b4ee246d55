"""Implicit model of the n-cube Q_n.

Vertices are the integers ``0 .. 2**n - 1``; bit ``i`` of a label holds
coordinate ``u_{i+1}``, so the ``i``-th neighbor of ``v`` (1-indexed
dimension) is ``v ^ (1 << (i - 1))``.  Vertex sets are Python ints used
as ``2**n``-bit membership vectors: bit ``v`` is set when vertex ``v``
belongs to the set.  No adjacency structure is ever materialized; all
neighborhood operations work on whole bitsets at once.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, NamedTuple

from .errors import DomainError

MAX_DIM = 30


def check_dim(n, cap=MAX_DIM):
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise DomainError(f"dimension must be a positive integer, got {n!r}")
    if cap is not None and n > cap:
        raise DomainError(f"dimension {n} exceeds the supported maximum {cap}")
    return n


def check_vertex(n, v):
    if not isinstance(v, int) or isinstance(v, bool) or not 0 <= v < (1 << n):
        raise DomainError(f"vertex {v!r} is not a label of Q_{n}")
    return v


@lru_cache(maxsize=None)
def _flip_masks(n):
    """Return ``((low_mask, shift), ...)`` for every bit position of Q_n.

    ``low_mask`` selects the vertices whose bit ``d`` is 0; moving those bits
    up by ``shift = 2**d`` maps each vertex onto its neighbor across ``d``.
    """
    size = 1 << n
    out = []
    for d in range(n):
        shift = 1 << d
        mask = (1 << shift) - 1
        width = 2 * shift
        while width < size:
            mask |= mask << width
            width *= 2
        out.append((mask, shift))
    return tuple(out)


def flip(bits, n, d):
    """Image of the vertex set ``bits`` under ``v -> v ^ (1 << d)``."""
    mask, shift = _flip_masks(n)[d]
    return ((bits >> shift) & mask) | ((bits & mask) << shift)


def closed_neighborhood(bits, n):
    """Bitset of vertices in ``bits`` or adjacent to one of them."""
    out = bits
    for mask, shift in _flip_masks(n):
        out |= ((bits >> shift) & mask) | ((bits & mask) << shift)
    return out


def full_bits(n):
    return (1 << (1 << n)) - 1


@dataclass(frozen=True)
class FaultSet:
    """A set of vertices of Q_n stored as a ``2**n``-bit membership vector."""

    n: int
    bits: int
    size: int = field(init=False, compare=False, repr=False)

    def __post_init__(self):
        check_dim(self.n)
        if self.bits < 0 or self.bits >> (1 << self.n):
            raise DomainError(f"membership vector does not fit Q_{self.n}")
        object.__setattr__(self, "size", self.bits.bit_count())

    @classmethod
    def empty(cls, n):
        return cls(n, 0)

    @classmethod
    def full(cls, n):
        return cls(n, full_bits(n))

    @classmethod
    def from_vertices(cls, n, vertices: Iterable[int]):
        check_dim(n)
        bits = 0
        for v in vertices:
            bits |= 1 << check_vertex(n, v)
        return cls(n, bits)

    def vertices(self) -> list[int]:
        """Member labels in ascending order."""
        out = []
        bits = self.bits
        while bits:
            low = bits & -bits
            out.append(low.bit_length() - 1)
            bits ^= low
        return out

    def __len__(self):
        return self.size

    def __iter__(self):
        return iter(self.vertices())

    def __contains__(self, v):
        return isinstance(v, int) and v >= 0 and bool(self.bits >> v & 1)

    def __or__(self, other: FaultSet) -> FaultSet:
        self._same_cube(other)
        return FaultSet(self.n, self.bits | other.bits)

    def __and__(self, other: FaultSet) -> FaultSet:
        self._same_cube(other)
        return FaultSet(self.n, self.bits & other.bits)

    def __sub__(self, other: FaultSet) -> FaultSet:
        self._same_cube(other)
        return FaultSet(self.n, self.bits & ~other.bits)

    def complement(self) -> FaultSet:
        return FaultSet(self.n, full_bits(self.n) & ~self.bits)

    def _same_cube(self, other):
        if not isinstance(other, FaultSet) or other.n != self.n:
            raise DomainError("vertex sets belong to different cubes")


def as_faultset(n, vertices) -> FaultSet:
    """Accept a FaultSet of Q_n or any iterable of labels."""
    if isinstance(vertices, FaultSet):
        if vertices.n != n:
            raise DomainError(
                f"vertex set belongs to Q_{vertices.n}, expected Q_{n}"
            )
        return vertices
    return FaultSet.from_vertices(n, vertices)


class ComponentProfile(NamedTuple):
    sizes: tuple[int, ...]
    max_component: FaultSet | None
    small_total: int

    @property
    def count(self):
        return len(self.sizes)


class Decomposition(NamedTuple):
    zero: FaultSet
    one: FaultSet
    matching: list[tuple[int, int]]


def hamming(u, v):
    return (u ^ v).bit_count()


def neighbors(n, v) -> list[int]:
    """Neighbors of ``v``, ordered by the index of the flipped bit."""
    check_dim(n, cap=None)
    check_vertex(n, v)
    return [v ^ (1 << d) for d in range(n)]


def common_neighbors(n, u, v) -> list[int]:
    """Shared neighbors of ``u`` and ``v`` in ascending order.

    In Q_n two distinct vertices share exactly two neighbors when they are
    at Hamming distance 2 and none otherwise.
    """
    check_dim(n, cap=None)
    check_vertex(n, u)
    check_vertex(n, v)
    if u == v:
        raise DomainError("common neighbors need two distinct vertices")
    diff = u ^ v
    if diff.bit_count() != 2:
        return []
    low = diff & -diff
    return sorted((u ^ low, v ^ low))


def vertex_boundary(n, H) -> FaultSet:
    """Vertices outside ``H`` adjacent to at least one vertex of ``H``."""
    check_dim(n)
    H = as_faultset(n, H)
    if not H.bits:
        raise DomainError("the vertex boundary of the empty set is undefined")
    return FaultSet(n, closed_neighborhood(H.bits, n) & ~H.bits)


def decompose(n, i) -> Decomposition:
    """Split Q_n along dimension ``i`` (1-indexed) into two (n-1)-cubes.

    Returns the half with coordinate ``u_i = 0``, the half with ``u_i = 1``
    and the perfect matching of ``i``-th edges, as ``(v, pair vertex)``
    tuples with ``v`` taken from the zero half in ascending order.
    """
    check_dim(n)
    if not isinstance(i, int) or not 1 <= i <= n:
        raise DomainError(f"dimension index {i!r} is not in 1..{n}")
    mask, shift = _flip_masks(n)[i - 1]
    zero = FaultSet(n, mask)
    one = FaultSet(n, full_bits(n) & ~mask)
    matching = [(v, v ^ shift) for v in zero.vertices()]
    return Decomposition(zero, one, matching)


def induced_edge_count(n, X) -> int:
    """Number of edges of Q_n with both endpoints in ``X``."""
    X = as_faultset(n, X)
    total = 0
    for mask, shift in _flip_masks(n):
        total += (X.bits & mask & (X.bits >> shift)).bit_count()
    return total


def _fill(seed, alive, n):
    """Connected component of ``alive`` containing the vertices in ``seed``.

    Level-synchronous breadth-first search: the frontier bitset plays the
    role of the work queue and is expanded one layer per iteration.
    """
    masks = _flip_masks(n)
    comp = frontier = seed
    while True:
        grown = frontier
        for mask, shift in masks:
            grown |= ((frontier >> shift) & mask) | ((frontier & mask) << shift)
        frontier = grown & alive & ~comp
        if not frontier:
            return comp
        comp |= frontier


def component_bitsets(n, S) -> list[int]:
    """Components of Q_n - S as bitsets, ordered by smallest member label."""
    S = as_faultset(n, S)
    alive = full_bits(n) & ~S.bits
    out = []
    while alive:
        comp = _fill(alive & -alive, alive, n)
        out.append(comp)
        alive &= ~comp
    return out


def components(n, S) -> ComponentProfile:
    """Component orders of Q_n - S plus one maximum-order component.

    Among several maximum components the one holding the smallest vertex
    label is returned, so profiles are reproducible.
    """
    check_dim(n)
    comps = component_bitsets(n, S)
    if not comps:
        return ComponentProfile((), None, 0)
    sizes = [c.bit_count() for c in comps]
    top = max(sizes)
    biggest = comps[sizes.index(top)]
    ordered = tuple(sorted(sizes, reverse=True))
    return ComponentProfile(ordered, FaultSet(n, biggest), sum(ordered) - top)


def is_connected(n, S) -> bool:
    """True when Q_n - S is nonempty and connected."""
    return len(component_bitsets(n, S)) == 1
