"""
Limits of poset-indexed diagrams as spaces of presections.

Over an initial scaffold P with minima M, a presection is a tuple (v_m) in the
product of the fibers at the minima such that for every element q and every
two scaffold relations l < q, m < q the images G_lq(v_l) and G_mq(v_m) agree.
The limit is the kernel of the stacked agreement system; any element of Q is
reached from one minimum below it by a structure map.
"""

from dataclasses import dataclass, field
from itertools import combinations
from typing import Callable, Dict, Hashable, List, Optional, Sequence, Tuple

import logging

import numpy as np

from ..config import settings
from ..exceptions import LimitError, RepresentationError
from ..linalg.field import PrimeField
from ..modules.representation import ModuleRep
from ..scaffolds.scaffold import Scaffold

logger = logging.getLogger(__name__)

Element = Hashable
Order = Callable[[Element, Element], bool]


@dataclass(frozen=True)
class PresectionBasis:
    """Columns of basis are presections, stacked over the minima in the given order."""

    field: PrimeField
    minima: Tuple[Element, ...]
    dims: Tuple[int, ...]
    basis: np.ndarray
    leq: Optional[Order] = field(default=None, repr=False)
    # q -> (module, minimum used, map); an entry only serves the module it was built from.
    cone_cache: Dict[Element, Tuple[ModuleRep, Element, np.ndarray]] = field(
        default_factory=dict, repr=False, compare=False
    )

    @property
    def dim(self) -> int:
        return self.basis.shape[1]

    @property
    def offsets(self) -> Dict[Element, int]:
        out, start = {}, 0
        for m, k in zip(self.minima, self.dims):
            out[m] = start
            start += k
        return out

    def component(self, m: Element) -> np.ndarray:
        """Rows of the basis at the minimum m: the cone map to m."""
        start = self.offsets[m]
        return self.basis[start:start + self.dims[self.minima.index(m)]]

    def minima_below(self, q: Element) -> List[Element]:
        if q in self.minima:
            return [q]
        if self.leq is None:
            raise LimitError(f"{q!r} is not a minimum and no order is available")
        return [m for m in self.minima if self.leq(m, q)]

    def cone_map(self, q: Element, G: ModuleRep) -> np.ndarray:
        """The map lim G -> G_q, as a dims[q] x dim matrix."""
        cached = self.cone_cache.get(q)
        if cached is not None and cached[0] is G:
            return cached[2]
        below = self.minima_below(q)
        if not below:
            raise LimitError(f"no minimum lies below {q!r}")
        l = below[0]
        matrix = self.field.multiply(G.structure_map(l, q), self.component(l))
        if settings.debug_checks:
            for m in below[1:]:
                other = self.field.multiply(G.structure_map(m, q), self.component(m))
                if not self.field.equal(other, matrix):
                    raise LimitError(f"presections disagree at {q!r} through {l!r} and {m!r}")
        self.cone_cache[q] = (G, l, matrix)
        return matrix


def extend_presection(v: np.ndarray, q: Element, G: ModuleRep, basis: PresectionBasis) -> np.ndarray:
    """
    The value at q of the section determined by a presection v.

    v is a vector over the minima (stacked like basis.basis). The result does
    not depend on which minimum below q is used; debug mode checks all of them.
    """
    F = basis.field
    v = F.array(np.asarray(v).reshape(-1, 1))
    offsets = basis.offsets
    below = basis.minima_below(q)
    if not below:
        raise LimitError(f"no minimum lies below {q!r}")

    def through(m: Element) -> np.ndarray:
        k = basis.dims[basis.minima.index(m)]
        return F.multiply(G.structure_map(m, q), v[offsets[m]:offsets[m] + k])

    value = through(below[0])
    if settings.debug_checks:
        for m in below[1:]:
            if not F.equal(through(m), value):
                raise LimitError(f"presection extensions disagree at {q!r}")
    return value.reshape(-1)


def _agreement_rows(
    G: ModuleRep, q: Element, l: Element, m: Element, offsets: Dict[Element, int], total: int
) -> np.ndarray:
    F = G.field
    block = F.zeros(G.dims[q], total)
    block[:, offsets[l]:offsets[l] + G.dims[l]] = G.structure_map(l, q)
    right = F.neg(G.structure_map(m, q))
    block[:, offsets[m]:offsets[m] + G.dims[m]] = (
        block[:, offsets[m]:offsets[m] + G.dims[m]] + right
    ) % F.p
    return block


def _solve(G: ModuleRep, minima: Sequence[Element], constraints, leq: Optional[Order]) -> PresectionBasis:
    F = G.field
    minima = tuple(minima)
    dims = tuple(G.dims[m] for m in minima)
    offsets, start = {}, 0
    for m, k in zip(minima, dims):
        offsets[m] = start
        start += k
    total = start

    try:
        blocks = [_agreement_rows(G, q, l, m, offsets, total) for q, l, m in constraints]
    except RepresentationError as exc:
        raise LimitError(f"cannot assemble the limit system: {exc}") from exc
    blocks = [b for b in blocks if b.shape[0]]
    if blocks:
        system = np.concatenate(blocks, axis=0)
        basis = F.kernel_basis(system)
    else:
        system = F.zeros(0, total)
        basis = F.identity(total)
    logger.debug(f"Limit system: {system.shape[0]} equations in {total} unknowns, kernel {basis.shape[1]}")
    return PresectionBasis(field=F, minima=minima, dims=dims, basis=basis, leq=leq)


def limit_presections(G: ModuleRep, P: Scaffold) -> PresectionBasis:
    """Presection basis of lim G, pairing consecutive scaffold relations into each element."""
    if P.direction != "initial":
        raise LimitError("limits need an initial scaffold")
    constraints = []
    for q, sources in P.sources().items():
        constraints.extend((q, a, b) for a, b in zip(sources, sources[1:]))
    result = _solve(G, P.extrema, constraints, P.order())
    logger.info(f"Limit via scaffold: {len(P.extrema)} minima, dimension {result.dim}")
    return result


def limit_all_pairs(G: ModuleRep, P: Scaffold) -> PresectionBasis:
    """Same limit, with an agreement equation for every pair of relations into an element."""
    if P.direction != "initial":
        raise LimitError("limits need an initial scaffold")
    constraints = []
    for q, sources in P.sources().items():
        constraints.extend((q, a, b) for a, b in combinations(sources, 2))
    return _solve(G, P.extrema, constraints, P.order())


def limit_full_equalizer(G: ModuleRep) -> PresectionBasis:
    """
    Sections over every element: G_pq(v_p) = v_q for each stored relation.

    The basis is stacked over all elements of G in order, so it is a
    PresectionBasis whose "minima" are all elements.
    """
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
        block = F.zeros(G.dims[q], total)
        block[:, offsets[p]:offsets[p] + G.dims[p]] = G.maps[(p, q)]
        block[:, offsets[q]:offsets[q] + G.dims[q]] = F.neg(F.identity(G.dims[q]))
        if block.shape[0]:
            blocks.append(block)
    basis = F.kernel_basis(np.concatenate(blocks, axis=0)) if blocks else F.identity(total)
    logger.debug(f"Full equalizer: {len(G.relations)} relations, {total} unknowns, dimension {basis.shape[1]}")
    return PresectionBasis(field=F, minima=elements, dims=dims, basis=basis)
