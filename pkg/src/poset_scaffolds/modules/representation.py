"""
Matrix representations of modules over a subposet.

A ModuleRep stores a dimension per element and a matrix per stored relation
(p, q) with p ≤ q, shaped dims[q] x dims[p]. Relations that are not stored
are reached by composing stored ones along a path.
"""

from collections import deque
from dataclasses import dataclass, field
from typing import Dict, Hashable, Iterable, List, Optional, Sequence, Tuple, Union

import logging

import numpy as np

from ..exceptions import RepresentationError
from ..linalg.field import PrimeField
from ..posets.grid import GridInterval
from ..posets.poset import Poset

logger = logging.getLogger(__name__)

Element = Hashable
Relation = Tuple[Element, Element]


@dataclass(frozen=True)
class ModuleRep:
    """A representation: vector spaces on elements, linear maps on relations."""

    field: PrimeField
    elements: Tuple[Element, ...]
    relations: Tuple[Relation, ...]
    dims: Dict[Element, int]
    maps: Dict[Relation, np.ndarray]
    basis_labels: Dict[Element, Tuple] = field(default_factory=dict, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "elements", tuple(self.elements))
        object.__setattr__(self, "relations", tuple(tuple(r) for r in self.relations))
        members = set(self.elements)
        for e in self.elements:
            if e not in self.dims:
                raise RepresentationError(f"no dimension given for {e!r}")
        for p, q in self.relations:
            if p not in members or q not in members:
                raise RepresentationError(f"relation ({p!r}, {q!r}) leaves the carrier")
            if (p, q) not in self.maps:
                raise RepresentationError(f"missing structure map for ({p!r}, {q!r})")
            expected = (self.dims[q], self.dims[p])
            if self.maps[(p, q)].shape != expected:
                raise RepresentationError(
                    f"map ({p!r}, {q!r}) has shape {self.maps[(p, q)].shape}, expected {expected}"
                )

    @property
    def max_dim(self) -> int:
        return max(self.dims.values(), default=0)

    def total_dim(self, elements: Optional[Iterable[Element]] = None) -> int:
        return sum(self.dims[e] for e in (self.elements if elements is None else elements))

    def _upward(self) -> Dict[Element, List[Element]]:
        adjacency: Dict[Element, List[Element]] = {e: [] for e in self.elements}
        for p, q in self.relations:
            if p != q:
                adjacency[p].append(q)
        return adjacency

    def structure_map(self, p: Element, q: Element) -> np.ndarray:
        """The map p -> q, composing stored relations along a path when needed."""
        if p == q:
            return self.field.identity(self.dims[p])
        stored = self.maps.get((p, q))
        if stored is not None:
            return stored

        adjacency = self._upward()
        previous: Dict[Element, Element] = {p: p}
        queue = deque([p])
        while queue and q not in previous:
            v = queue.popleft()
            for w in adjacency.get(v, ()):
                if w not in previous:
                    previous[w] = v
                    queue.append(w)
        if q not in previous:
            raise RepresentationError(f"no chain of stored relations from {p!r} to {q!r}")

        path = [q]
        while path[-1] != p:
            path.append(previous[path[-1]])
        path.reverse()
        out = self.field.identity(self.dims[p])
        for a, b in zip(path, path[1:]):
            out = self.field.multiply(self.maps[(a, b)], out)
        return out

    def restrict(self, elements: Sequence[Element], relations: Sequence[Relation]) -> "ModuleRep":
        """The representation on a subposet whose relations hold in this one."""
        elements = tuple(elements)
        relations = tuple(tuple(r) for r in relations)
        missing = [e for e in elements if e not in self.dims]
        if missing:
            raise RepresentationError(f"representation is not defined at {missing[0]!r}")
        return ModuleRep(
            field=self.field,
            elements=elements,
            relations=relations,
            dims={e: self.dims[e] for e in elements},
            maps={(p, q): self.structure_map(p, q) for p, q in relations},
            basis_labels={e: self.basis_labels[e] for e in elements if e in self.basis_labels},
        )

    def direct_sum(self, other: "ModuleRep") -> "ModuleRep":
        """Direct sum over the common carrier (elements and relations must agree)."""
        if set(self.elements) != set(other.elements) or set(self.relations) != set(other.relations):
            raise RepresentationError("direct sums need the same carrier")
        maps = {}
        for r in self.relations:
            A, B = self.maps[r], other.maps[r]
            block = np.zeros((A.shape[0] + B.shape[0], A.shape[1] + B.shape[1]), dtype=np.int64)
            block[: A.shape[0], : A.shape[1]] = A
            block[A.shape[0]:, A.shape[1]:] = B
            maps[r] = block
        return ModuleRep(
            field=self.field,
            elements=self.elements,
            relations=self.relations,
            dims={e: self.dims[e] + other.dims[e] for e in self.elements},
            maps=maps,
        )


def validate_rep(M: ModuleRep) -> bool:
    """Identities on identity relations, and functoriality on stored composable triples."""
    F = M.field
    for (p, q), A in M.maps.items():
        if A.shape != (M.dims[q], M.dims[p]):
            logger.debug(f"map ({p!r}, {q!r}) is mis-shaped")
            return False
        if p == q and not F.equal(A, F.identity(M.dims[p])):
            logger.debug(f"identity relation on {p!r} is not the identity")
            return False

    upward: Dict[Element, List[Element]] = {}
    for p, q in M.relations:
        if p != q:
            upward.setdefault(p, []).append(q)
    for a, mids in upward.items():
        for b in mids:
            for c in upward.get(b, ()):
                if (a, c) in M.maps:
                    composite = F.multiply(M.maps[(b, c)], M.maps[(a, b)])
                    if not F.equal(composite, M.maps[(a, c)]):
                        logger.debug(f"maps fail to compose along {a!r} < {b!r} < {c!r}")
                        return False
    return True


def interval_module_rep(
    Q: Union[Poset, GridInterval],
    elements: Sequence[Element],
    relations: Sequence[Relation],
    field: PrimeField,
) -> ModuleRep:
    """k^Q on a carrier: the field on points of Q, zero elsewhere, identities between."""
    dims = {e: int(e in Q) for e in elements}
    maps = {
        (p, q): np.ones((dims[q], dims[p]), dtype=np.int64) for p, q in relations
    }
    return ModuleRep(field, tuple(elements), tuple(relations), dims, maps)
