"""
Generalized rank: the rank of the canonical map lim G -> colim G.

Over a connected poset Q with a minimum m below a maximum w, that map factors
as G_m -> G_w composed with the cone and cocone maps, so it is enough to know
G on the union of an initial scaffold, a final scaffold and the relation m ≤ w.
"""

from dataclasses import dataclass
from typing import Hashable, List, Optional, Sequence, Tuple, Union

import logging

from ..exceptions import GrankError, LimitError
from ..modules.homology import homology_rep
from ..modules.labeled import QrComplex, order_oracle
from ..modules.representation import ModuleRep
from ..posets.grid import GridInterval, grid_leq
from ..posets.poset import Poset
from ..scaffolds.general import final_scaffold_general, initial_scaffold_general
from ..scaffolds.grid import final_scaffold_grid, initial_scaffold_grid
from ..scaffolds.scaffold import Scaffold
from .colimits import CopresentationBasis, colimit_copresentations, colimit_full_coequalizer
from .limits import PresectionBasis, limit_full_equalizer, limit_presections

logger = logging.getLogger(__name__)

Element = Hashable
Source = Union[QrComplex, ModuleRep]
Ambient = Union[Poset, GridInterval]


@dataclass(frozen=True)
class GrankReport:
    grank: int
    dim_lim: int
    dim_colim: int
    m: Element
    w: Element


def comparable_extremal_pairs(Q: Ambient) -> List[Tuple[Element, Element]]:
    """All (minimum, maximum) pairs with m ≤ w, in canonical order."""
    if isinstance(Q, Poset):
        return [(m, w) for m in Q.minima() for w in Q.maxima() if Q.leq(m, w)]
    ext = Q.to_extrema()
    return [(m, w) for m in ext.minima for w in ext.maxima if grid_leq(m, w)]


def _choose_pair(Q: Ambient) -> Tuple[Element, Element]:
    if isinstance(Q, Poset):
        m = Q.minima()[0]
        above = [w for w in Q.maxima() if Q.leq(m, w)]
    else:
        ext = Q.to_extrema()
        m = ext.minima[0]
        above = [w for w in ext.maxima if grid_leq(m, w)]
    if above:
        return m, above[0]
    pairs = comparable_extremal_pairs(Q)
    if not pairs:
        raise GrankError("no minimum lies below a maximum")
    return pairs[0]


def initial_scaffold_of(Q: Ambient, algo: str = "auto") -> Scaffold:
    if isinstance(Q, Poset):
        return initial_scaffold_general(Q)
    return initial_scaffold_grid(Q, algo)


def final_scaffold_of(Q: Ambient, algo: str = "auto") -> Scaffold:
    if isinstance(Q, Poset):
        return final_scaffold_general(Q)
    if not Q.is_finite():
        raise LimitError("final scaffolds need a finite interval")
    return final_scaffold_grid(Q, algo)


def module_on(
    source: Source,
    elements: Sequence[Element],
    relations: Sequence[Tuple[Element, Element]],
    leq,
    threads: Optional[int] = None,
) -> ModuleRep:
    """The module on a subposet: homology of a complex, or restriction of a representation."""
    if isinstance(source, QrComplex):
        return homology_rep(source, elements, relations, leq, threads=threads)
    return source.restrict(elements, relations)


def limit_over(
    source: Source, Q: Ambient, algo: str = "auto", threads: Optional[int] = None
) -> Tuple[PresectionBasis, Scaffold]:
    """lim of the module over Q, computed on an initial scaffold only."""
    P = initial_scaffold_of(Q, algo)
    G = module_on(source, P.elements, P.order_relations, order_oracle(Q), threads)
    return limit_presections(G, P), P


def colimit_over(
    source: Source, Q: Ambient, algo: str = "auto", threads: Optional[int] = None
) -> Tuple[CopresentationBasis, Scaffold]:
    """colim of the module over Q, computed on a final scaffold only."""
    P = final_scaffold_of(Q, algo)
    G = module_on(source, P.elements, P.order_relations, order_oracle(Q), threads)
    return colimit_copresentations(G, P), P


def _scaffolds(Q: Ambient, algo: str) -> Tuple[Scaffold, Scaffold]:
    if not Q.is_connected():
        raise GrankError("generalized rank is undefined on a disconnected ambient poset")
    if isinstance(Q, GridInterval) and not Q.is_finite():
        raise GrankError("generalized rank needs a finite interval")
    return initial_scaffold_of(Q, algo), final_scaffold_of(Q, algo)


def generalized_rank(
    source: Source,
    Q: Ambient,
    pair: Optional[Tuple[Element, Element]] = None,
    algo: str = "auto",
    threads: Optional[int] = None,
) -> GrankReport:
    """
    grank of the homology of a complex (or of a given representation) over Q.

    Only the fibers on P = (initial scaffold) ∪ (final scaffold) ∪ {m ≤ w} are
    ever computed.
    """
    initial, final = _scaffolds(Q, algo)
    m, w = pair if pair is not None else _choose_pair(Q)
    leq = order_oracle(Q)
    if not leq(m, w):
        raise GrankError(f"{m!r} is not below {w!r}")

    elements = list(dict.fromkeys(list(initial.elements) + list(final.elements)))
    relations = list(dict.fromkeys(list(initial.order_relations) + list(final.order_relations)))
    if m != w and (m, w) not in relations:
        relations.append((m, w))
    G = module_on(source, elements, relations, leq, threads)

    lim = limit_presections(G, initial)
    colim = colimit_copresentations(G, final)
    F = G.field
    value = F.rank(F.chain(colim.component(w), G.structure_map(m, w), lim.component(m)))
    logger.info(
        f"Generalized rank {value} (dim lim {lim.dim}, dim colim {colim.dim}) "
        f"on {len(elements)} of the ambient elements, pair {m!r} <= {w!r}"
    )
    return GrankReport(grank=value, dim_lim=lim.dim, dim_colim=colim.dim, m=m, w=w)


def generalized_rank_full(
    source: Source,
    Q: Poset,
    pair: Optional[Tuple[Element, Element]] = None,
) -> GrankReport:
    """grank through the full equalizer and coequalizer over every element of a finite poset."""
    if not Q.is_connected():
        raise GrankError("generalized rank is undefined on a disconnected poset")
    m, w = pair if pair is not None else _choose_pair(Q)
    G = module_on(source, Q.canonical_order, Q.hasse_edges, Q.leq)
    lim = limit_full_equalizer(G)
    colim = colimit_full_coequalizer(G)
    F = G.field
    value = F.rank(F.chain(colim.component(w), G.structure_map(m, w), lim.component(m)))
    return GrankReport(grank=value, dim_lim=lim.dim, dim_colim=colim.dim, m=m, w=w)
