"""
First Betti numbers of monomial ideals through upper Koszul complexes.

For a monomial ideal J given by exponent vectors and a degree z, the upper
Koszul complex has a vertex s whenever z - e_s is in J and an edge {s, t}
whenever z - e_s - e_t is in J. Its number of components minus one is the
first Betti number of J at z, and the support of those numbers is exactly the
set of essential points of the upset of generators.
"""

from dataclasses import dataclass, field
from itertools import combinations
from typing import Dict, FrozenSet, Iterable, Optional, Sequence, Tuple

import logging

import numpy as np
from scipy.cluster.hierarchy import DisjointSet

from ..posets.grid import GridInterval, GridPoint, as_point, dominates_any, prune_minimal
from .joins import pairwise_joins

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class BettiSupport:
    """Supports of the zeroth and first Betti numbers."""

    beta0: Tuple[GridPoint, ...]
    beta1: Tuple[GridPoint, ...]
    beta1_values: Dict[GridPoint, int] = field(default_factory=dict, compare=False)


def koszul_beta1(z: Sequence[int], generators: np.ndarray) -> int:
    """First Betti number of the ideal at degree z."""
    d = len(z)
    zarr = np.asarray(z, dtype=np.int64)
    units = np.eye(d, dtype=np.int64)
    pairs = list(combinations(range(d), 2))
    shifted = [zarr - units[s] for s in range(d)] + [zarr - units[s] - units[t] for s, t in pairs]
    inside = dominates_any(np.asarray(shifted), generators)

    vertices = [s for s in range(d) if inside[s]]
    if not vertices:
        return 0
    complex_ = DisjointSet(vertices)
    for k, (s, t) in enumerate(pairs):
        if inside[d + k]:
            complex_.merge(s, t)
    return complex_.n_subsets - 1


def koszul_beta1_support(
    generators: Iterable[Sequence[int]], candidates: Optional[Iterable[Sequence[int]]] = None
) -> BettiSupport:
    """
    Betti supports of the ideal generated by the given exponents.

    Candidates default to the pairwise joins of the minimal generators, which
    contain every point of the first Betti support.
    """
    beta0 = prune_minimal(generators)
    gens = np.asarray(beta0, dtype=np.int64)
    if candidates is None:
        candidates = pairwise_joins(beta0)
    values: Dict[GridPoint, int] = {}
    for z in sorted({as_point(c) for c in candidates}):
        b = koszul_beta1(z, gens)
        if b > 0:
            values[z] = b
    logger.debug(f"Koszul oracle: {len(beta0)} generators, {len(values)} points in the beta1 support")
    return BettiSupport(beta0=beta0, beta1=tuple(sorted(values)), beta1_values=values)


def essential_points_grid(Q: GridInterval) -> FrozenSet[GridPoint]:
    """I_Q: minima and first Betti support of Up(Q), restricted to Q."""
    support = koszul_beta1_support(Q.minima)
    points = list(support.beta0) + list(support.beta1)
    inside = Q.contains_many(np.asarray(points, dtype=np.int64))
    return frozenset(p for p, ok in zip(points, inside) if ok)
