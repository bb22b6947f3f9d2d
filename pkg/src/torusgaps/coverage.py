"""A growing union of half-open intervals on [0, 1).

Backing store is a pair of parallel sorted lists (starts, ends) of disjoint
intervals.  Insertion merges overlapping or touching neighbours, queries are
two bisections, so a sweep over E intervals costs O(E log E) overall.
Endpoints may be floats or Fractions; merging touching intervals is safe
because [a, b) u [b, c) = [a, c) exactly as point sets.
"""

from __future__ import annotations

from bisect import bisect_left, bisect_right

from .numerics import Real


class ArcCoverage:
    __slots__ = ("_starts", "_ends")

    def __init__(self) -> None:
        self._starts: list[Real] = []
        self._ends: list[Real] = []

    def __len__(self) -> int:
        return len(self._starts)

    def intervals(self) -> list[tuple[Real, Real]]:
        return list(zip(self._starts, self._ends))

    def total_measure(self) -> Real:
        return sum((e - s for s, e in zip(self._starts, self._ends)), 0)

    def overlaps(self, start: Real, end: Real) -> bool:
        """Does [start, end) intersect the covered set?  Empty queries
        (start >= end) never overlap."""
        if start >= end or not self._starts:
            return False
        i = bisect_right(self._starts, start)
        if i > 0 and self._ends[i - 1] > start:
            return True
        return i < len(self._starts) and self._starts[i] < end

    def insert(self, start: Real, end: Real) -> None:
        """Add [start, end), merging with any interval it overlaps or touches."""
        if start >= end:
            return
        i = bisect_left(self._ends, start)
        j = bisect_right(self._starts, end)
        if i < j:
            start = min(start, self._starts[i])
            end = max(end, self._ends[j - 1])
            del self._starts[i:j]
            del self._ends[i:j]
        self._starts.insert(i, start)
        self._ends.insert(i, end)
