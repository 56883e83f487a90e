"""
Algorithm selection for grid intervals, final scaffolds by reflection, and
the quadratic-size family of upsets in N^4.
"""

from typing import Literal, Sequence, Tuple

import logging

from ..exceptions import IntervalError
from ..posets.grid import GridInterval, GridPoint, join, prune_minimal, reflect_point
from .joins import scaffold_joins_nd
from .koszul import koszul_beta1_support
from .scaffold import Scaffold, relabel
from .sweep import scaffold_sweep_3d, sweep_upset_scaffold

logger = logging.getLogger(__name__)

GridAlgorithm = Literal["auto", "sweep", "joins"]


def resolve_algorithm(d: int, algo: str = "auto") -> str:
    if algo == "auto":
        return "sweep" if d <= 3 else "joins"
    if algo == "sweep" and d not in (2, 3):
        raise IntervalError(f"the sweep handles d = 2 or 3, got d = {d}")
    if algo not in ("sweep", "joins"):
        raise IntervalError(f"unknown grid algorithm {algo!r}")
    return algo


def initial_scaffold_grid(Q: GridInterval, algo: GridAlgorithm = "auto") -> Scaffold:
    # d = 1 intervals are chains; the join algorithm handles them directly.
    chosen = resolve_algorithm(Q.d, algo) if Q.d > 1 else "joins"
    logger.debug(f"Initial scaffold of a d={Q.d} interval via {chosen}")
    if chosen == "sweep":
        return scaffold_sweep_3d(Q)
    return scaffold_joins_nd(Q)


def final_scaffold_grid(Q: GridInterval, algo: GridAlgorithm = "auto") -> Scaffold:
    """Final scaffold of a finite interval: the initial scaffold of its reflection, reflected back."""
    reflected, box = Q.reflect()
    inner = initial_scaffold_grid(reflected, algo)
    mapping = {p: reflect_point(p, box) for p in inner.elements}
    return relabel(inner, mapping, direction="final", parent=Q)


def betti1_support(generators: Sequence[Sequence[int]], algo: GridAlgorithm = "auto") -> Tuple[GridPoint, ...]:
    """First Betti support of the monomial ideal with the given exponents (= essential points of the upset)."""
    minima = prune_minimal(generators)
    if not minima:
        return ()
    d = len(minima[0])
    if d > 1 and resolve_algorithm(d, algo) == "sweep":
        essential = sweep_upset_scaffold(minima).essential
        return tuple(sorted(p[:d] for p in essential))
    return koszul_beta1_support(minima).beta1


def upset_family_u_k(k: int) -> Tuple[GridPoint, ...]:
    """Minima of U^k = Up(A ∪ B) in N^4 with A = {(i, k-i, 0, 0)}, B = {(0, 0, i, k-i)}."""
    if k < 1:
        raise ValueError("the family starts at k = 1")
    A = [(i, k - i, 0, 0) for i in range(k + 1)]
    B = [(0, 0, i, k - i) for i in range(k + 1)]
    return tuple(sorted(A + B))


def upset_family_essential(k: int) -> Tuple[GridPoint, ...]:
    """Essential points of U^k: all (i, k-i, j, k-j) plus consecutive joins inside A and inside B."""
    cross = [(i, k - i, j, k - j) for i in range(k + 1) for j in range(k + 1)]
    inside_a = [join((i, k - i, 0, 0), (i + 1, k - i - 1, 0, 0)) for i in range(k)]
    inside_b = [join((0, 0, i, k - i), (0, 0, i + 1, k - i - 1)) for i in range(k)]
    return tuple(sorted(set(cross + inside_a + inside_b)))
