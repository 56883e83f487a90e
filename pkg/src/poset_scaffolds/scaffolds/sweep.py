"""
Slice sweep computing initial scaffolds of intervals in N^2 and N^3.

The upset U = Up(Q) is swept through its horizontal slices U_z in increasing z.
The frontier holds the minima of the current slice, keyed by x, each tagged
with the height at which it became a minimum of U. At every level that brings
new minima the sweep records

  * X points: frontier points evicted by a new minimum, lifted to height z,
    each related to its own lift-off point and to one new minimum below it;
  * W points: joins of consecutive frontier minima, related to both, when
    one of the two is new and no X point sits strictly between it and the join.

The scaffold of U found this way is then intersected with Q by a second sweep
over the slices of the cogenerators (or of the maxima). Planar inputs are
embedded at height 0.
"""

from dataclasses import dataclass, field
from itertools import groupby
from typing import Dict, List, Optional, Sequence, Tuple

import logging

import numpy as np
from sortedcontainers import SortedList

from ..exceptions import IntervalError
from ..posets.grid import GridInterval, GridPoint, prune_minimal
from ..posets.staircase import Staircase
from .scaffold import Scaffold

logger = logging.getLogger(__name__)

Point3 = Tuple[int, int, int]


def lift(p: Sequence[int]) -> Point3:
    """Embed a point of N^2 or N^3 into N^3."""
    if len(p) == 2:
        return (int(p[0]), int(p[1]), 0)
    return (int(p[0]), int(p[1]), int(p[2]))


@dataclass(frozen=True)
class SweepLevel:
    """What one slice of the sweep produced."""

    z: int
    new_minima: Tuple[Point3, ...]
    w_points: Tuple[Point3, ...]
    x_points: Tuple[Point3, ...]
    frontier_size: int


class _LevelPoints:
    """X points of the current level, indexed by row and by column."""

    def __init__(self):
        self.by_row: Dict[int, SortedList] = {}
        self.by_column: Dict[int, SortedList] = {}

    def add(self, x: int, y: int) -> None:
        self.by_row.setdefault(y, SortedList()).add(x)
        self.by_column.setdefault(x, SortedList()).add(y)

    @staticmethod
    def _strictly_between(values: Optional[SortedList], lo: int, hi: int) -> bool:
        if not values:
            return False
        i = values.bisect_right(lo)
        return i < len(values) and values[i] < hi

    def in_row(self, y: int, lo: int, hi: int) -> bool:
        return self._strictly_between(self.by_row.get(y), lo, hi)

    def in_column(self, x: int, lo: int, hi: int) -> bool:
        return self._strictly_between(self.by_column.get(x), lo, hi)


class SweepState:
    """
    Frontier of the sweep: the minima of U_z keyed by x with their birth heights.

    The frontier is an antichain in the plane, so ascending x is descending y.
    """

    def __init__(self):
        self.z: Optional[int] = None
        self.frontier = Staircase()
        self.skip_index = -1

    def __len__(self) -> int:
        return len(self.frontier)

    def lifted(self, i: int) -> Point3:
        x, y, t = self.frontier.at(i)
        return (x, y, t)

    def is_antichain(self) -> bool:
        ys = [y for _, y, _ in self.frontier]
        return all(a > b for a, b in zip(ys, ys[1:]))

    def _lower_witness(self, x: int, y: int) -> Point3:
        """A minimum of U at the current height strictly below (x, y, z) in the plane."""
        left = self.frontier.lower(x)
        if left is not None and left[1] <= y:
            return (left[0], left[1], left[2])
        step = self.frontier.get(x)
        if step is None or step[0] > y:
            raise AssertionError(f"no new minimum below evicted point ({x}, {y})")
        return (x, step[0], step[1])

    def advance(
        self, z: int, new_minima: Sequence[Tuple[int, int]], relations: Dict[Point3, List[Point3]]
    ) -> SweepLevel:
        """Process the generators of height z (sorted by x) and record new relations."""
        if self.z is not None and z <= self.z:
            raise ValueError(f"levels must increase: {z} after {self.z}")
        self.z = z

        def relate(p: Point3, m: Point3) -> None:
            lows = relations.setdefault(p, [])
            if m not in lows:
                lows.append(m)

        x_points: List[Point3] = []
        level = _LevelPoints()
        for mx, my in new_minima:
            evicted = self.frontier.insert(mx, my, z)
            if evicted is None:
                raise IntervalError(f"generator ({mx}, {my}, {z}) is not minimal")
            for ex, ey, t in evicted:
                p = (ex, ey, z)
                x_points.append(p)
                level.add(ex, ey)
                relate(p, (ex, ey, t))

        w_points: List[Point3] = []
        k = len(self.frontier)
        self.skip_index = -1
        for mx, _ in new_minima:
            i = self.frontier.position(mx)
            # Pair j is the frontier pair (j, j+1); new minima arrive in x order.
            for j in (i - 1, i):
                if j < 0 or j >= k - 1 or j <= self.skip_index:
                    continue
                self.skip_index = j
                left, right = self.lifted(j), self.lifted(j + 1)
                # The join (right.x, left.y) needs a new endpoint with no X point
                # strictly between it and the join.
                left_clear = left[2] == z and not level.in_row(left[1], left[0], right[0])
                right_clear = right[2] == z and not level.in_column(right[0], right[1], left[1])
                if not (left_clear or right_clear):
                    continue
                p = (right[0], left[1], z)
                w_points.append(p)
                relate(p, left)
                relate(p, right)

        in_w = set(w_points)
        for p in x_points:
            if p not in in_w:
                relate(p, self._lower_witness(p[0], p[1]))

        return SweepLevel(
            z=z,
            new_minima=tuple((x, y, z) for x, y in new_minima),
            w_points=tuple(sorted(in_w)),
            x_points=tuple(sorted(x_points)),
            frontier_size=k,
        )


@dataclass(frozen=True)
class UpsetSweep:
    """Initial scaffold of an upset of N^3 together with the per-level trace."""

    minima: Tuple[Point3, ...]
    relations: Dict[Point3, Tuple[Point3, ...]] = field(repr=False)
    levels: Tuple[SweepLevel, ...] = field(repr=False)

    @property
    def essential(self) -> Tuple[Point3, ...]:
        return tuple(sorted(self.relations))

    @property
    def elements(self) -> Tuple[Point3, ...]:
        return tuple(sorted(set(self.minima) | set(self.relations)))


def sweep_upset_scaffold(generators: Sequence[Sequence[int]]) -> UpsetSweep:
    """Scaffold of Up(generators) in N^3 (or N^2, embedded at height 0)."""
    minima = [lift(p) for p in prune_minimal(generators)]
    state = SweepState()
    relations: Dict[Point3, List[Point3]] = {}
    levels = []
    ordered = sorted(minima, key=lambda p: (p[2], p[0], p[1]))
    for z, group in groupby(ordered, key=lambda p: p[2]):
        level = state.advance(z, [(p[0], p[1]) for p in group], relations)
        logger.debug(
            f"Level z={z}: {len(level.new_minima)} new minima, {len(level.w_points)} W points, "
            f"{len(level.x_points)} X points, frontier {level.frontier_size}"
        )
        levels.append(level)
    return UpsetSweep(
        minima=tuple(sorted(minima)),
        relations={p: tuple(sorted(v)) for p, v in relations.items()},
        levels=tuple(levels),
    )


def slice_membership(
    points: Sequence[Point3], boundary: Sequence[Point3], form: str
) -> np.ndarray:
    """
    Interval membership for points already known to lie in Up(minima).

    For the upset form a point is outside iff it dominates a cogenerator; for the
    extrema form it is inside iff it lies below a maximum, tested on negated
    coordinates. Either way one staircase sweep over z answers all queries.
    """
    sign = 1 if form == "upset" else -1
    queries = sorted(range(len(points)), key=lambda k: sign * points[k][2])
    bounds = sorted((tuple(sign * c for c in b) for b in boundary), key=lambda b: b[2])
    stairs = Staircase()
    hits = np.zeros(len(points), dtype=bool)
    j = 0
    for k in queries:
        qx, qy, qz = (sign * c for c in points[k])
        while j < len(bounds) and bounds[j][2] <= qz:
            stairs.insert(bounds[j][0], bounds[j][1])
            j += 1
        hits[k] = stairs.covers(qx, qy)
    return ~hits if form == "upset" else hits


def scaffold_sweep_3d(Q: GridInterval) -> Scaffold:
    """Initial scaffold of an interval in N^2 or N^3, computed by the slice sweep."""
    if Q.d not in (2, 3):
        raise IntervalError(f"the sweep handles d = 2 or 3, got d = {Q.d}")
    sweep = sweep_upset_scaffold(Q.minima)
    candidates = list(sweep.elements)
    if Q.maxima is not None:
        boundary, form = Q.maxima, "extrema"
    else:
        boundary, form = Q.cogenerators, "upset"
    keep = slice_membership(candidates, [lift(b) for b in boundary], form)
    kept = {p for p, ok in zip(candidates, keep) if ok}

    def back(p: Point3) -> GridPoint:
        return p[:2] if Q.d == 2 else p

    elements = tuple(sorted(back(p) for p in kept))
    relations = tuple(
        sorted(
            ((back(m), back(p)) for p, lows in sweep.relations.items() if p in kept for m in lows),
            key=lambda r: (r[1], r[0]),
        )
    )
    logger.info(
        f"Sweep scaffold: {len(sweep.minima)} minima, {len(sweep.relations)} essential points "
        f"of the upset, {len(elements)} elements kept in the interval"
    )
    return Scaffold("initial", elements, relations, parent=Q)
