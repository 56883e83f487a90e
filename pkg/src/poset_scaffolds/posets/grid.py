"""
Intervals in the grid N^d.

An interval is stored either by its upset presentation (its minima plus the
minima of the complementary upset, called cogenerators) or, when finite, by
its minima and maxima. Points are plain tuples of nonnegative ints; bulk
membership and domination tests run on numpy arrays.
"""

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, List, Optional, Sequence, Set, Tuple

import logging

import numpy as np
from scipy.cluster.hierarchy import DisjointSet

from ..config import settings
from ..exceptions import IntervalError, MaterializationError
from .poset import Poset
from .staircase import Staircase

logger = logging.getLogger(__name__)

GridPoint = Tuple[int, ...]

# Rows per block in pairwise domination scans
_BLOCK = 2048


def as_point(coords: Iterable[int]) -> GridPoint:
    return tuple(int(c) for c in coords)


def join(a: Sequence[int], b: Sequence[int]) -> GridPoint:
    return tuple(max(x, y) for x, y in zip(a, b))


def grid_leq(a: Sequence[int], b: Sequence[int]) -> bool:
    return all(x <= y for x, y in zip(a, b))


def format_point(p: Sequence[int]) -> str:
    return ",".join(str(c) for c in p)


def _as_array(points: Sequence[Sequence[int]], d: int) -> np.ndarray:
    if len(points) == 0:
        return np.zeros((0, d), dtype=np.int64)
    return np.asarray(points, dtype=np.int64).reshape(len(points), d)


def dominates_any(points: np.ndarray, generators: np.ndarray) -> np.ndarray:
    """mask[k] is true iff points[k] ≥ some generator."""
    out = np.zeros(points.shape[0], dtype=bool)
    if generators.shape[0] == 0 or points.shape[0] == 0:
        return out
    for start in range(0, points.shape[0], _BLOCK):
        block = points[start:start + _BLOCK]
        out[start:start + _BLOCK] = np.any(
            np.all(block[:, None, :] >= generators[None, :, :], axis=2), axis=1
        )
    return out


def below_any(points: np.ndarray, bounds: np.ndarray) -> np.ndarray:
    """mask[k] is true iff points[k] ≤ some bound."""
    return dominates_any(-points, -bounds)


def _prune_lexsorted(points: List[GridPoint], d: int) -> List[GridPoint]:
    """Drop points dominated by another; input sorted lexicographically, deduplicated."""
    if d == 1:
        return points[:1]
    if d == 2:
        kept, best = [], None
        for p in points:
            if best is None or p[1] < best:
                kept.append(p)
                best = p[1]
        return kept
    if d == 3:
        stairs = Staircase()
        kept = []
        for p in sorted(points, key=lambda q: (q[2], q[0], q[1])):
            if stairs.insert(p[0], p[1]) is not None:
                kept.append(p)
        return sorted(kept)

    kept_rows: List[np.ndarray] = []
    kept = []
    for p in points:
        row = np.asarray(p, dtype=np.int64)
        if kept_rows and np.any(np.all(np.asarray(kept_rows) <= row, axis=1)):
            continue
        kept_rows.append(row)
        kept.append(p)
    return kept


def prune_minimal(points: Iterable[Sequence[int]]) -> Tuple[GridPoint, ...]:
    """Minimal elements of a finite point set, sorted lexicographically."""
    unique = sorted({as_point(p) for p in points})
    if not unique:
        return ()
    d = len(unique[0])
    if any(len(p) != d for p in unique):
        raise IntervalError("points of mixed dimension")
    return tuple(_prune_lexsorted(unique, d))


def prune_maximal(points: Iterable[Sequence[int]]) -> Tuple[GridPoint, ...]:
    """Maximal elements of a finite point set, sorted lexicographically."""
    negated = prune_minimal(tuple(-c for c in p) for p in points)
    return tuple(sorted(tuple(-c for c in p) for p in negated))


@dataclass(frozen=True)
class GridInterval:
    """
    An interval in N^d.

    Exactly one boundary is stored: cogenerators (upset presentation, possibly
    infinite) or maxima (finite). An empty cogenerator tuple means Q = Up(minima).
    """

    d: int
    minima: Tuple[GridPoint, ...]
    cogenerators: Optional[Tuple[GridPoint, ...]] = None
    maxima: Optional[Tuple[GridPoint, ...]] = None

    def __post_init__(self):
        if self.d < 1:
            raise IntervalError(f"dimension must be at least 1, got {self.d}")
        if self.cogenerators is not None and self.maxima is not None:
            raise IntervalError("give cogenerators or maxima, not both")
        if self.cogenerators is None and self.maxima is None:
            object.__setattr__(self, "cogenerators", ())
        if not self.minima:
            raise IntervalError("an interval needs at least one minimum")
        for name in ("minima", "cogenerators", "maxima"):
            points = getattr(self, name)
            if points is None:
                continue
            points = tuple(as_point(p) for p in points)
            for p in points:
                if len(p) != self.d:
                    raise IntervalError(f"{name} point {p} does not have dimension {self.d}")
                if min(p) < 0:
                    raise IntervalError(f"{name} point {p} has a negative coordinate")
            object.__setattr__(self, name, points)

    # -- construction -------------------------------------------------------------

    @classmethod
    def from_upset_presentation(
        cls, minima: Iterable[Sequence[int]], cogenerators: Iterable[Sequence[int]] = ()
    ) -> "GridInterval":
        """Build from possibly non-minimal generator lists; dominated points are pruned."""
        minima = prune_minimal(minima)
        if not minima:
            raise IntervalError("an interval needs at least one minimum")
        return cls(len(minima[0]), minima, cogenerators=prune_minimal(cogenerators))

    @classmethod
    def from_extrema(
        cls, minima: Iterable[Sequence[int]], maxima: Iterable[Sequence[int]]
    ) -> "GridInterval":
        minima = prune_minimal(minima)
        if not minima:
            raise IntervalError("an interval needs at least one minimum")
        return cls(len(minima[0]), minima, maxima=prune_maximal(maxima))

    @property
    def form(self) -> str:
        return "extrema" if self.maxima is not None else "upset"

    # -- arrays ---------------------------------------------------------------------

    @cached_property
    def minima_array(self) -> np.ndarray:
        return _as_array(self.minima, self.d)

    @cached_property
    def boundary_array(self) -> np.ndarray:
        points = self.maxima if self.maxima is not None else self.cogenerators
        return _as_array(points, self.d)

    # -- membership -------------------------------------------------------------------

    def contains_many(self, points: np.ndarray) -> np.ndarray:
        points = np.asarray(points, dtype=np.int64).reshape(-1, self.d)
        inside = dominates_any(points, self.minima_array)
        if self.maxima is not None:
            return inside & below_any(points, self.boundary_array)
        return inside & ~dominates_any(points, self.boundary_array)

    def contains(self, p: Sequence[int]) -> bool:
        if len(p) != self.d:
            raise IntervalError(f"point {tuple(p)} does not have dimension {self.d}")
        return bool(self.contains_many(np.asarray([p], dtype=np.int64))[0])

    __contains__ = contains

    # -- validation -------------------------------------------------------------------

    def validate(self) -> None:
        """Raise IntervalError unless the data describes a (connected, convex) interval."""
        if prune_minimal(self.minima) != tuple(sorted(self.minima)):
            raise IntervalError("minima are not pairwise incomparable")
        if self.maxima is not None:
            if prune_maximal(self.maxima) != tuple(sorted(self.maxima)):
                raise IntervalError("maxima are not pairwise incomparable")
            if not np.all(dominates_any(self.boundary_array, self.minima_array)):
                raise IntervalError("some maximum lies above no minimum")
            if not np.all(below_any(self.minima_array, self.boundary_array)):
                raise IntervalError("some minimum lies below no maximum")
        else:
            if prune_minimal(self.cogenerators) != tuple(sorted(self.cogenerators)):
                raise IntervalError("cogenerators are not pairwise incomparable")
            if not np.all(dominates_any(self.boundary_array, self.minima_array)):
                raise IntervalError("some cogenerator lies above no minimum")
            if np.any(dominates_any(self.minima_array, self.boundary_array)):
                raise IntervalError("some minimum lies above a cogenerator")

        components = self.minima_components()
        if len(components) > 1:
            raise IntervalError(
                f"interval is disconnected: {len(components)} components "
                f"(e.g. minima {components[0][0]} and {components[1][0]})"
            )

    def minima_components(self) -> List[List[GridPoint]]:
        """Group minima by the component of Q they lie in, using joins as witnesses."""
        M = self.minima_array
        forest = DisjointSet(range(len(self.minima)))
        for i in range(len(self.minima) - 1):
            joins = np.maximum(M[i], M[i + 1:])
            for k in np.flatnonzero(self.contains_many(joins)):
                forest.merge(i, i + 1 + int(k))
        groups = sorted(forest.subsets(), key=min)
        return [[self.minima[k] for k in sorted(g)] for g in groups]

    def is_connected(self) -> bool:
        return len(self.minima_components()) == 1

    # -- finiteness and boxes -------------------------------------------------------

    def is_finite(self) -> bool:
        if self.maxima is not None:
            return True
        C = self.boundary_array
        if C.shape[0] == 0:
            return False
        for m in self.minima_array:
            above = C > m
            for axis in range(self.d):
                others = np.delete(above, axis, axis=1)
                # The ray from m along this axis escapes every cogenerator.
                if np.all(np.any(others, axis=1)):
                    return False
        return True

    def bounding_box(self) -> GridPoint:
        """Componentwise upper bound of all points of a finite interval."""
        if self.maxima is not None:
            return as_point(self.boundary_array.max(axis=0))
        if not self.is_finite():
            raise MaterializationError("infinite interval has no bounding box")
        return as_point(self.boundary_array.max(axis=0) - 1)

    # -- materialization -------------------------------------------------------------

    def points(self, bound: Optional[Sequence[int]] = None, cap: Optional[int] = None) -> List[GridPoint]:
        """
        All points of Q (inside the box [0, bound] when given), sorted lexicographically.

        Points are reached from the minima by unit steps; convexity keeps every
        intermediate step inside Q.
        """
        if bound is None:
            if not self.is_finite():
                raise MaterializationError(
                    "interval is infinite; pass a truncation bound to materialize it"
                )
        else:
            bound = as_point(bound)
            if len(bound) != self.d:
                raise MaterializationError(f"bound {bound} does not have dimension {self.d}")
        cap = settings.materialize_cap if cap is None else cap
        limit = np.asarray(bound, dtype=np.int64) if bound is not None else None

        steps = np.eye(self.d, dtype=np.int64)
        frontier = self.minima_array
        if limit is not None:
            frontier = frontier[np.all(frontier <= limit, axis=1)]
        frontier = frontier[self.contains_many(frontier)]
        seen: Set[GridPoint] = {as_point(p) for p in frontier}
        while frontier.shape[0]:
            if len(seen) > cap:
                raise MaterializationError(
                    f"interval has more than {cap} points; raise the materialization cap"
                )
            nxt = (frontier[:, None, :] + steps[None, :, :]).reshape(-1, self.d)
            nxt = np.unique(nxt, axis=0)
            if limit is not None:
                nxt = nxt[np.all(nxt <= limit, axis=1)]
            nxt = nxt[self.contains_many(nxt)]
            fresh = [p for p in map(as_point, nxt) if p not in seen]
            seen.update(fresh)
            frontier = _as_array(fresh, self.d)
        if len(seen) > cap:
            raise MaterializationError(
                f"interval has more than {cap} points; raise the materialization cap"
            )
        return sorted(seen)

    def to_poset(self, bound: Optional[Sequence[int]] = None, cap: Optional[int] = None) -> Poset:
        elements = self.points(bound, cap)
        present = set(elements)
        edges = []
        for p in elements:
            for axis in range(self.d):
                q = p[:axis] + (p[axis] + 1,) + p[axis + 1:]
                if q in present:
                    edges.append((p, q))
        logger.debug(f"Materialized interval: {len(elements)} points, {len(edges)} cover edges")
        return Poset(tuple(elements), tuple(edges))

    # -- conversions ---------------------------------------------------------------------

    def to_extrema(self, cap: Optional[int] = None) -> "GridInterval":
        if self.maxima is not None:
            return self
        points = self.points(cap=cap)
        arr = _as_array(points, self.d)
        steps = np.eye(self.d, dtype=np.int64)
        is_max = np.ones(len(points), dtype=bool)
        for axis in range(self.d):
            is_max &= ~self.contains_many(arr + steps[axis])
        maxima = tuple(points[k] for k in np.flatnonzero(is_max))
        return GridInterval(self.d, self.minima, maxima=maxima)

    def to_upset_presentation(self, cap: Optional[int] = None) -> "GridInterval":
        """Upset presentation: cogenerators are the minimal points of Up(Q) outside Q."""
        if self.maxima is None:
            return self
        points = self.points(cap=cap)
        arr = _as_array(points, self.d)
        steps = np.eye(self.d, dtype=np.int64)
        candidates = np.unique(
            (arr[:, None, :] + steps[None, :, :]).reshape(-1, self.d), axis=0
        )
        outside = candidates[~self.contains_many(candidates)]
        return GridInterval(self.d, self.minima, cogenerators=prune_minimal(map(as_point, outside)))

    def reflect(self) -> Tuple["GridInterval", GridPoint]:
        """
        Image of a finite interval under p ↦ B − p, with B the box of its maxima.

        The reflection reverses the order, so initial structure of the image is
        final structure of the original.
        """
        ext = self.to_extrema()
        box = ext.bounding_box()
        B = np.asarray(box, dtype=np.int64)
        reflected = GridInterval.from_extrema(
            [tuple(B - np.asarray(w)) for w in ext.maxima],
            [tuple(B - np.asarray(m)) for m in ext.minima],
        )
        return reflected, box


def reflect_point(p: Sequence[int], box: Sequence[int]) -> GridPoint:
    return tuple(int(b) - int(c) for b, c in zip(box, p))


def membership(Q: GridInterval, p: Sequence[int]) -> bool:
    return Q.contains(p)


def grid_interval_to_poset(
    Q: GridInterval, bound: Optional[Sequence[int]] = None, cap: Optional[int] = None
) -> Poset:
    return Q.to_poset(bound, cap)
