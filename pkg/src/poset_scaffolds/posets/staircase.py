"""
Planar staircases: antichains of points in N^2 kept in a balanced ordered map.

Entries are keyed by x. Because the stored points are pairwise incomparable,
ascending x is the same as descending y, so "is (x, y) above the staircase"
is one predecessor lookup.
"""

from typing import Any, Iterator, List, Optional, Tuple

from sortedcontainers import SortedDict

Entry = Tuple[int, int, Any]


class Staircase:
    """Minimal points of a planar upset, each carrying an optional payload."""

    def __init__(self):
        self._steps = SortedDict()

    def __len__(self) -> int:
        return len(self._steps)

    def __iter__(self) -> Iterator[Entry]:
        for x, (y, payload) in self._steps.items():
            yield x, y, payload

    def __contains__(self, x: int) -> bool:
        return x in self._steps

    def get(self, x: int) -> Optional[Tuple[int, Any]]:
        return self._steps.get(x)

    def floor(self, x: int) -> Optional[Entry]:
        """The entry with the largest key ≤ x, i.e. the lowest step left of x."""
        i = self._steps.bisect_right(x) - 1
        if i < 0:
            return None
        key = self._steps.keys()[i]
        y, payload = self._steps[key]
        return key, y, payload

    def lower(self, x: int) -> Optional[Entry]:
        """The entry with the largest key < x."""
        i = self._steps.bisect_left(x) - 1
        if i < 0:
            return None
        key = self._steps.keys()[i]
        y, payload = self._steps[key]
        return key, y, payload

    def covers(self, x: int, y: int) -> bool:
        """True iff some stored point is ≤ (x, y)."""
        step = self.floor(x)
        return step is not None and step[1] <= y

    def dominated_by(self, x: int, y: int) -> List[Entry]:
        """Stored points ≥ (x, y), in ascending x."""
        out: List[Entry] = []
        keys = self._steps.keys()
        for i in range(self._steps.bisect_left(x), len(keys)):
            key = keys[i]
            ky, payload = self._steps[key]
            if ky < y:
                break
            out.append((key, ky, payload))
        return out

    def insert(self, x: int, y: int, payload: Any = None) -> Optional[List[Entry]]:
        """
        Add (x, y) and evict every stored point above it.

        Returns the evicted entries, or None when (x, y) is already covered
        (in which case nothing changes).
        """
        if self.covers(x, y):
            return None
        evicted = self.dominated_by(x, y)
        for key, _, _ in evicted:
            del self._steps[key]
        self._steps[x] = (y, payload)
        return evicted

    def position(self, x: int) -> int:
        """Index of the stored key x in ascending order."""
        return self._steps.index(x)

    def at(self, i: int) -> Entry:
        key = self._steps.keys()[i]
        y, payload = self._steps[key]
        return key, y, payload
