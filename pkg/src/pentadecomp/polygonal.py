"""Exact pentagonal/polygonal number arithmetic and enumeration tables.

All arithmetic is exact integer arithmetic; square-root tests go through
``math.isqrt`` so membership stays correct far beyond 2**53.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import isqrt

from .errors import DomainError, MemoryBudgetError, RangeOverflowError

# Public operations accept inputs up to this magnitude; beyond it a typed
# overflow error is raised instead of silently producing huge integers.
MAX_INPUT = 10**15

# Default cap on enumeration-table size, in entries.
MAX_TABLE_ENTRIES = 1 << 27


def pentagonal(k: int) -> int:
    """Return k(3k-1)/2.

    For k >= 0 this is the ordinary pentagonal number; for k < 0 it is the
    other branch of the generalized pentagonal numbers.
    """
    if abs(k) > MAX_INPUT:
        raise RangeOverflowError(f"pentagonal index {k} outside supported range")
    return k * (3 * k - 1) // 2


def polygonal(m: int, k: int) -> int:
    """Return the k-th polygonal number of order m: (m-2)*k(k-1)/2 + k."""
    if m < 3:
        raise DomainError(f"polygonal order must be >= 3, got {m}")
    if k < 0:
        raise DomainError(f"polygonal argument must be >= 0, got {k}")
    if k > MAX_INPUT or m > MAX_INPUT:
        raise RangeOverflowError(f"polygonal({m}, {k}) outside supported range")
    return (m - 2) * (k * (k - 1) // 2) + k


def pentagonal_index(v: int) -> int | None:
    """Return k >= 0 with p5(k) == v, or None if v is not pentagonal.

    Exact test: v is pentagonal iff 24v+1 is the square of an integer
    congruent to 5 mod 6 (or v == 0).
    """
    if v < 0:
        return None
    if v == 0:
        return 0
    d = 24 * v + 1
    r = isqrt(d)
    if r * r != d or r % 6 != 5:
        return None
    return (r + 1) // 6


def is_pentagonal(v: int) -> bool:
    """True iff v = k(3k-1)/2 for some k >= 0."""
    return pentagonal_index(v) is not None


def generalized_pentagonal_index(v: int) -> int | None:
    """Return an integer k (possibly negative) with p5(k) == v, or None.

    Negative k covers the k(3k+1)/2 branch of generalized pentagonal numbers.
    """
    if v < 0:
        return None
    if v == 0:
        return 0
    d = 24 * v + 1
    r = isqrt(d)
    if r * r != d:
        return None
    if r % 6 == 5:
        return (r + 1) // 6
    if r % 6 == 1:
        return -((r - 1) // 6)
    return None


def max_pentagonal_index(bound: int) -> int:
    """Largest k >= 0 with p5(k) <= bound (bound >= 0)."""
    if bound < 0:
        raise DomainError("bound must be nonnegative")
    # k <= (1 + sqrt(24*bound + 1)) / 6
    k = (1 + isqrt(24 * bound + 1)) // 6
    while pentagonal(k + 1) <= bound:
        k += 1
    while k > 0 and pentagonal(k) > bound:
        k -= 1
    return k


@dataclass(frozen=True)
class PentagonalTable:
    """All ordinary pentagonal numbers up to ``bound``, with O(1) membership."""

    bound: int
    values: tuple[int, ...]
    _members: frozenset[int] = field(repr=False, default_factory=frozenset)

    def __contains__(self, v: int) -> bool:
        return v in self._members

    def membership(self, v: int) -> bool:
        return v in self._members


def pentagonals_upto(bound: int, max_entries: int = MAX_TABLE_ENTRIES) -> PentagonalTable:
    """Table of {p5(k) : k >= 0, p5(k) <= bound}, ascending."""
    if bound < 0:
        raise DomainError("bound must be nonnegative")
    if bound > 10**30:
        raise RangeOverflowError(f"bound {bound} outside supported range")
    kmax = max_pentagonal_index(bound)
    if kmax + 1 > max_entries:
        raise MemoryBudgetError(
            f"pentagonal table would hold {kmax + 1} entries (cap {max_entries})"
        )
    values = tuple(k * (3 * k - 1) // 2 for k in range(kmax + 1))
    return PentagonalTable(bound, values, frozenset(values))


def generalized_pentagonals_upto(bound: int) -> tuple[int, ...]:
    """Ascending tuple of all generalized pentagonal numbers <= bound."""
    if bound < 0:
        raise DomainError("bound must be nonnegative")
    out = set()
    k = 0
    while True:
        v = k * (3 * k - 1) // 2
        w = k * (3 * k + 1) // 2
        if v > bound and w > bound:
            break
        if v <= bound:
            out.add(v)
        if w <= bound:
            out.add(w)
        k += 1
    return tuple(sorted(out))
