"""
Matrix representation of the homology ker g / im f of a (Q,r)-complex on a
subposet.

For every element p the fiber complex X_p -> Y_p -> Z_p is formed from the
generators graded ≤ p. A basis F_p of Y_p is assembled as

    [ K·B | K_C | D ]

where K is an echelon kernel basis of g_p, D extends K by unit vectors at the
indices that are not leading indices of K, B is an echelon basis of im f_p in
K-coordinates and K_C are the kernel vectors at indices that are not pivots
of B. The middle block is a basis of the homology at p. Structure maps are
read off from F_q^{-1} · I_pq · F_p, where I_pq includes Y_p into Y_q.
"""

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Dict, Hashable, List, Optional, Sequence, Tuple

import logging

import numpy as np

from ..config import settings
from ..exceptions import ComplexError
from ..linalg.field import PrimeField
from .labeled import Order, QrComplex, fiber_indices
from .representation import ModuleRep

logger = logging.getLogger(__name__)

Element = Hashable


@dataclass(frozen=True)
class FiberBasis:
    """Change of basis for Y_p adapted to im f_p ⊆ ker g_p."""

    y_index: Tuple[int, ...]
    basis: np.ndarray
    inverse: np.ndarray
    image_rank: int
    dim: int

    @property
    def homology_columns(self) -> slice:
        return slice(self.image_rank, self.image_rank + self.dim)


def _leading_indices(K: np.ndarray) -> List[int]:
    return [int(np.flatnonzero(K[:, j])[0]) for j in range(K.shape[1])]


def fiber_basis(C: QrComplex, p: Element, leq: Order) -> FiberBasis:
    F: PrimeField = C.field
    yi = fiber_indices(C.y_grades, p, leq)
    xi = fiber_indices(C.x_grades, p, leq)
    zi = fiber_indices(C.z_grades, p, leq)
    f_p = C.f.entries[np.ix_(yi, xi)]
    g_p = C.g.entries[np.ix_(zi, yi)]
    n = len(yi)

    if not F.is_zero(F.multiply(g_p, f_p)):
        raise ComplexError(f"g∘f is not zero at {p!r}")

    K = F.kernel_basis(g_p) if n else F.zeros(0, 0)
    k = K.shape[1]
    leading = _leading_indices(K)
    D = F.zeros(n, n - k)
    for col, j in enumerate(F.complement_indices(leading, n)):
        D[j, col] = 1
    S = np.concatenate([K, D], axis=1)

    # Coordinates of im f_p in the kernel basis are the top rows of S^{-1} f_p.
    gamma = F.multiply(F.inverse(S), f_p)[:k] if n else F.zeros(0, f_p.shape[1])
    B, pivots = F.image_basis(gamma)
    rest = F.complement_indices(pivots, k)

    basis = np.concatenate([F.multiply(K, B), K[:, rest], D], axis=1)
    inverse = F.inverse(basis) if n else F.zeros(0, 0)
    return FiberBasis(
        y_index=tuple(yi), basis=basis, inverse=inverse, image_rank=len(pivots), dim=len(rest)
    )


def _relation_map(C: QrComplex, lower: FiberBasis, upper: FiberBasis) -> np.ndarray:
    F = C.field
    position = {y: i for i, y in enumerate(upper.y_index)}
    try:
        rows = [position[y] for y in lower.y_index]
    except KeyError:
        raise ComplexError("relation goes downward: a lower generator is missing above") from None
    included = F.zeros(len(upper.y_index), lower.dim)
    included[rows] = lower.basis[:, lower.homology_columns]
    return F.multiply(upper.inverse[upper.homology_columns], included)


def homology_rep(
    C: QrComplex,
    elements: Sequence[Element],
    relations: Sequence[Tuple[Element, Element]],
    leq: Order,
    threads: Optional[int] = None,
) -> ModuleRep:
    """ModuleRep of the homology of C restricted to a subposet (elements and relations)."""
    elements = tuple(elements)
    relations = tuple(tuple(r) for r in relations)
    for p, q in relations:
        if not leq(p, q):
            raise ComplexError(f"relation ({p!r}, {q!r}) does not hold in the ambient order")
    if settings.debug_checks:
        C.f.check_labels(leq)
        C.g.check_labels(leq)

    workers = settings.threads if threads is None else threads
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            fibers = dict(zip(elements, pool.map(lambda p: fiber_basis(C, p, leq), elements)))
            maps = dict(zip(relations, pool.map(
                lambda r: _relation_map(C, fibers[r[0]], fibers[r[1]]), relations)))
    else:
        fibers = {p: fiber_basis(C, p, leq) for p in elements}
        maps = {r: _relation_map(C, fibers[r[0]], fibers[r[1]]) for r in relations}

    dims = {p: fibers[p].dim for p in elements}
    labels: Dict[Element, Tuple] = {}
    for p, fb in fibers.items():
        middle = fb.basis[:, fb.homology_columns]
        labels[p] = tuple(fb.y_index[j] for j in _leading_indices(middle))
    logger.debug(f"Homology on {len(elements)} elements: total dimension {sum(dims.values())}")
    return ModuleRep(C.field, elements, relations, dims, maps, basis_labels=labels)
