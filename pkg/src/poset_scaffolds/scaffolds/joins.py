"""Initial scaffolds of intervals in N^d for any d, from pairwise joins of minima."""

from itertools import combinations
from typing import Dict, List, Tuple

import logging

import numpy as np
from scipy.cluster.hierarchy import DisjointSet

from ..posets.grid import GridInterval, GridPoint, join
from .scaffold import Scaffold

logger = logging.getLogger(__name__)


def pairwise_joins(minima: Tuple[GridPoint, ...]) -> List[GridPoint]:
    """Joins of distinct pairs of minima that are not minima themselves, sorted lexicographically."""
    base = set(minima)
    return sorted({join(a, b) for a, b in combinations(minima, 2)} - base)


def upset_scaffold_joins(minima: Tuple[GridPoint, ...]) -> Dict[GridPoint, Tuple[GridPoint, ...]]:
    """
    Essential points of Up(minima) with their scaffold relations.

    Candidates are visited lexicographically, which is a linear extension of
    the product order. A candidate t is essential iff the part of the scaffold
    built so far that lies below t splits into several components; each
    component is represented by its lexicographically smallest minimum.
    """
    minima = tuple(sorted(minima))
    d = len(minima[0])
    points = np.empty((len(minima) + 8, d), dtype=np.int64)
    points[: len(minima)] = minima
    size = len(minima)
    sources: List[Tuple[int, ...]] = [() for _ in minima]
    labels: List[GridPoint] = list(minima)
    relations: Dict[GridPoint, Tuple[GridPoint, ...]] = {}
    index = {m: k for k, m in enumerate(minima)}

    for t in pairwise_joins(minima):
        below = np.flatnonzero(np.all(points[:size] <= np.asarray(t), axis=1))
        forest = DisjointSet(int(k) for k in below if not sources[k])
        for k in below:
            lows = sources[k]
            for a, b in zip(lows, lows[1:]):
                forest.merge(a, b)
        groups = forest.subsets()
        if len(groups) < 2:
            continue
        reps = tuple(sorted(min(labels[k] for k in group) for group in groups))
        relations[t] = reps
        if size == points.shape[0]:
            points = np.concatenate([points, np.empty_like(points)])
        points[size] = t
        size += 1
        sources.append(tuple(index[m] for m in reps))
        labels.append(t)
    return relations


def scaffold_joins_nd(Q: GridInterval) -> Scaffold:
    """Initial scaffold of an interval in N^d: scaffold of Up(Q) intersected with Q."""
    relations = upset_scaffold_joins(Q.minima)
    candidates = sorted(set(Q.minima) | set(relations))
    inside = Q.contains_many(np.asarray(candidates, dtype=np.int64))
    kept = {p for p, ok in zip(candidates, inside) if ok}
    elements = tuple(sorted(kept))
    pairs = tuple(
        sorted(((m, p) for p, lows in relations.items() if p in kept for m in lows),
               key=lambda r: (r[1], r[0]))
    )
    logger.info(
        f"Join scaffold: {len(Q.minima)} minima, {len(relations)} essential points of the upset, "
        f"{len(elements)} elements kept in the interval"
    )
    return Scaffold("initial", elements, pairs, parent=Q)
