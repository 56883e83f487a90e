"""
Colimits, dual to limits: quotients of the sum of fibers at the maxima.

Over a final scaffold with maxima W, colim G is the sum of G_w over w in W
modulo the images G_pw(x) - G_pw'(x) for consecutive scaffold relations
p < w, p < w'. A basis of the quotient is given by a projection matrix whose
rows are coordinates on the complement of an echelon basis of the relations.
"""

from dataclasses import dataclass, field
from typing import Callable, Dict, Hashable, List, Optional, Sequence, Tuple

import logging

import numpy as np

from ..exceptions import LimitError, RepresentationError
from ..linalg.field import PrimeField
from ..modules.representation import ModuleRep
from ..scaffolds.scaffold import Scaffold

logger = logging.getLogger(__name__)

Element = Hashable
Order = Callable[[Element, Element], bool]


@dataclass(frozen=True)
class CopresentationBasis:
    """
    The colimit as a quotient of the sum over maxima.

    projection maps the stacked sum onto colimit coordinates; representatives
    are unit vectors of the sum whose classes form a basis of the colimit.
    """

    field: PrimeField
    maxima: Tuple[Element, ...]
    dims: Tuple[int, ...]
    projection: np.ndarray
    representatives: Tuple[int, ...]
    leq: Optional[Order] = field(default=None, repr=False)
    cocone_cache: Dict[Element, Tuple[ModuleRep, Element, np.ndarray]] = field(
        default_factory=dict, repr=False, compare=False
    )

    @property
    def dim(self) -> int:
        return self.projection.shape[0]

    @property
    def offsets(self) -> Dict[Element, int]:
        out, start = {}, 0
        for w, k in zip(self.maxima, self.dims):
            out[w] = start
            start += k
        return out

    def component(self, w: Element) -> np.ndarray:
        """Columns of the projection at the maximum w: the cocone map from w."""
        start = self.offsets[w]
        return self.projection[:, start:start + self.dims[self.maxima.index(w)]]

    def maxima_above(self, q: Element) -> List[Element]:
        if q in self.maxima:
            return [q]
        if self.leq is None:
            raise LimitError(f"{q!r} is not a maximum and no order is available")
        return [w for w in self.maxima if self.leq(q, w)]

    def cocone_map(self, q: Element, G: ModuleRep) -> np.ndarray:
        """The map G_q -> colim G, as a dim x dims[q] matrix."""
        cached = self.cocone_cache.get(q)
        if cached is not None and cached[0] is G:
            return cached[2]
        above = self.maxima_above(q)
        if not above:
            raise LimitError(f"no maximum lies above {q!r}")
        w = above[0]
        matrix = self.field.multiply(self.component(w), G.structure_map(q, w))
        self.cocone_cache[q] = (G, w, matrix)
        return matrix


def _quotient(F: PrimeField, total: int, relations: np.ndarray) -> Tuple[np.ndarray, Tuple[int, ...]]:
    """Projection onto V / span(relations) and the unit vectors spanning a complement."""
    if total == 0:
        return F.zeros(0, 0), ()
    span, pivots = F.image_basis(relations)
    rest = F.complement_indices(pivots, total)
    units = F.zeros(total, len(rest))
    for col, j in enumerate(rest):
        units[j, col] = 1
    basis = np.concatenate([span, units], axis=1)
    projection = F.inverse(basis)[len(pivots):]
    return projection, tuple(rest)


def _solve(
    G: ModuleRep, maxima: Sequence[Element], pairs, leq: Optional[Order]
) -> CopresentationBasis:
    F = G.field
    maxima = tuple(maxima)
    dims = tuple(G.dims[w] for w in maxima)
    offsets, start = {}, 0
    for w, k in zip(maxima, dims):
        offsets[w] = start
        start += k
    total = start

    blocks = []
    try:
        for p, a, b in pairs:
            block = F.zeros(total, G.dims[p])
            block[offsets[a]:offsets[a] + G.dims[a]] = G.structure_map(p, a)
            block[offsets[b]:offsets[b] + G.dims[b]] = (
                block[offsets[b]:offsets[b] + G.dims[b]] + F.neg(G.structure_map(p, b))
            ) % F.p
            blocks.append(block)
    except RepresentationError as exc:
        raise LimitError(f"cannot assemble the colimit system: {exc}") from exc
    relations = np.concatenate(blocks, axis=1) if blocks else F.zeros(total, 0)
    projection, rest = _quotient(F, total, relations)
    logger.debug(f"Colimit system: {relations.shape[1]} relations in {total} coordinates, quotient {len(rest)}")
    return CopresentationBasis(F, maxima, dims, projection, rest, leq=leq)


def colimit_copresentations(G: ModuleRep, P: Scaffold) -> CopresentationBasis:
    """Colimit over a final scaffold, pairing consecutive relations out of each element."""
    if P.direction != "final":
        raise LimitError("colimits need a final scaffold")
    pairs = []
    for p, sources in P.sources().items():
        pairs.extend((p, a, b) for a, b in zip(sources, sources[1:]))
    result = _solve(G, P.extrema, pairs, P.order())
    logger.info(f"Colimit via scaffold: {len(P.extrema)} maxima, dimension {result.dim}")
    return result


def colimit_full_coequalizer(G: ModuleRep) -> CopresentationBasis:
    """Colimit as the sum over every element modulo x - G_pq(x) for each stored relation."""
    F = G.field
    elements = G.elements
    dims = tuple(G.dims[e] for e in elements)
    offsets, start = {}, 0
    for e, k in zip(elements, dims):
        offsets[e] = start
        start += k
    total = start

    blocks = []
    for p, q in G.relations:
        if p == q:
            continue
        block = F.zeros(total, G.dims[p])
        block[offsets[q]:offsets[q] + G.dims[q]] = G.maps[(p, q)]
        block[offsets[p]:offsets[p] + G.dims[p]] = F.neg(F.identity(G.dims[p]))
        blocks.append(block)
    relations = np.concatenate(blocks, axis=1) if blocks else F.zeros(total, 0)
    projection, rest = _quotient(F, total, relations)
    return CopresentationBasis(F, elements, dims, projection, rest)
