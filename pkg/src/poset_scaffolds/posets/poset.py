"""
Finite posets given by a Hasse diagram.

Element identifiers are opaque hashables (strings for parsed posets, coordinate
tuples for materialized grid intervals). Internally every element is mapped to
a dense integer index and all hot loops run on indices.
"""

from dataclasses import dataclass
from functools import cached_property
from typing import Dict, FrozenSet, Hashable, Iterable, List, Sequence, Tuple

import heapq
import logging

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import connected_components

from ..exceptions import PosetError

logger = logging.getLogger(__name__)

Element = Hashable
Edge = Tuple[Element, Element]


def _index_elements(elements: Sequence[Element]) -> Dict[Element, int]:
    index: Dict[Element, int] = {}
    for i, e in enumerate(elements):
        if e in index:
            raise PosetError(f"duplicate element {e!r}")
        index[e] = i
    return index


def _edge_indices(
    hasse_edges: Iterable[Edge], index: Dict[Element, int]
) -> List[Tuple[int, int]]:
    pairs = []
    for lower, upper in hasse_edges:
        if lower not in index:
            raise PosetError(f"edge ({lower!r}, {upper!r}) names unknown element {lower!r}")
        if upper not in index:
            raise PosetError(f"edge ({lower!r}, {upper!r}) names unknown element {upper!r}")
        pairs.append((index[lower], index[upper]))
    return pairs


def _topological_order(
    n: int, pairs: Sequence[Tuple[int, int]], keys: Sequence[Element]
) -> List[int]:
    """Kahn's algorithm; ties are broken by the element identifier."""
    indegree = [0] * n
    successors: List[List[int]] = [[] for _ in range(n)]
    for a, b in pairs:
        if a == b:
            raise PosetError(f"self-loop on {keys[a]!r}: edges must form a DAG")
        successors[a].append(b)
        indegree[b] += 1

    heap = [(keys[i], i) for i in range(n) if indegree[i] == 0]
    heapq.heapify(heap)
    order: List[int] = []
    while heap:
        _, v = heapq.heappop(heap)
        order.append(v)
        for w in successors[v]:
            indegree[w] -= 1
            if indegree[w] == 0:
                heapq.heappush(heap, (keys[w], w))
    if len(order) != n:
        stuck = sorted(keys[i] for i in range(n) if indegree[i] > 0)
        raise PosetError(f"edges contain a directed cycle through {stuck[0]!r}")
    return order


def transitive_closure(hasse_edges: Iterable[Edge], elements: Sequence[Element]) -> np.ndarray:
    """
    Boolean matrix R with R[a, b] true iff a ≤ b.

    Reachability is propagated along a reverse topological order, which is a
    breadth-first search from every vertex sharing work between vertices.
    """
    elements = list(elements)
    index = _index_elements(elements)
    pairs = _edge_indices(hasse_edges, index)
    n = len(elements)
    order = _topological_order(n, pairs, elements)

    successors: List[List[int]] = [[] for _ in range(n)]
    for a, b in pairs:
        successors[a].append(b)

    reach = np.eye(n, dtype=bool)
    for v in reversed(order):
        for w in successors[v]:
            reach[v] |= reach[w]
    return reach


@dataclass(frozen=True)
class Poset:
    """A finite poset: elements plus the edges of its Hasse diagram."""

    elements: Tuple[Element, ...]
    hasse_edges: Tuple[Edge, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "elements", tuple(self.elements))
        object.__setattr__(self, "hasse_edges", tuple(tuple(e) for e in self.hasse_edges))
        # Fails fast on duplicates, unknown names and cycles.
        _ = self._order_indices

    # -- construction ---------------------------------------------------------------

    @classmethod
    def from_relations(cls, elements: Sequence[Element], relations: Iterable[Edge]) -> "Poset":
        """Build a poset from any generating set of relations (e.g. the full order)."""
        elements = tuple(elements)
        relations = [(a, b) for a, b in relations if a != b]
        closure = transitive_closure(relations, elements)
        strict = closure & ~np.eye(len(elements), dtype=bool)
        # a < b is a cover iff no c with a < c < b.
        through = (strict.astype(np.int32) @ strict.astype(np.int32)) > 0
        covers = np.argwhere(strict & ~through)
        edges = tuple((elements[a], elements[b]) for a, b in covers)
        return cls(elements, edges)

    def opposite(self) -> "Poset":
        return Poset(self.elements, tuple((b, a) for a, b in self.hasse_edges))

    def full_subposet(self, subset: Iterable[Element]) -> "Poset":
        """Induced subposet, with its own covering relations derived from the order."""
        wanted = set(subset)
        chosen = [e for e in self.canonical_order if e in wanted]
        idx = [self.index[e] for e in chosen]
        sub = self.relation_matrix[np.ix_(idx, idx)]
        relations = [(chosen[a], chosen[b]) for a, b in np.argwhere(sub) if a != b]
        return Poset.from_relations(chosen, relations)

    # -- cached structure ---------------------------------------------------------------

    @cached_property
    def index(self) -> Dict[Element, int]:
        return _index_elements(self.elements)

    @cached_property
    def edge_indices(self) -> Tuple[Tuple[int, int], ...]:
        return tuple(_edge_indices(self.hasse_edges, self.index))

    @cached_property
    def _order_indices(self) -> Tuple[int, ...]:
        return tuple(_topological_order(len(self.elements), self.edge_indices, self.elements))

    @cached_property
    def canonical_order(self) -> Tuple[Element, ...]:
        """Topological order refined lexicographically by identifier."""
        return tuple(self.elements[i] for i in self._order_indices)

    @cached_property
    def rank_of(self) -> Dict[Element, int]:
        """Position of each element in the canonical order."""
        return {e: k for k, e in enumerate(self.canonical_order)}

    @cached_property
    def relation_matrix(self) -> np.ndarray:
        return transitive_closure(self.hasse_edges, self.elements)

    @cached_property
    def lower_covers(self) -> Tuple[Tuple[int, ...], ...]:
        below: List[List[int]] = [[] for _ in self.elements]
        for a, b in self.edge_indices:
            below[b].append(a)
        return tuple(tuple(sorted(x)) for x in below)

    @cached_property
    def upper_covers(self) -> Tuple[Tuple[int, ...], ...]:
        above: List[List[int]] = [[] for _ in self.elements]
        for a, b in self.edge_indices:
            above[a].append(b)
        return tuple(tuple(sorted(x)) for x in above)

    def __len__(self) -> int:
        return len(self.elements)

    def __contains__(self, item: Element) -> bool:
        return item in self.index

    # -- order queries --------------------------------------------------------------

    def _require(self, q: Element) -> int:
        try:
            return self.index[q]
        except KeyError:
            raise PosetError(f"unknown element {q!r}") from None

    def leq(self, a: Element, b: Element) -> bool:
        return bool(self.relation_matrix[self._require(a), self._require(b)])

    def less(self, a: Element, b: Element) -> bool:
        return a != b and self.leq(a, b)

    def _ordered(self, mask: np.ndarray) -> Tuple[Element, ...]:
        return tuple(e for e in self.canonical_order if mask[self.index[e]])

    def open_downset(self, q: Element) -> FrozenSet[Element]:
        i = self._require(q)
        mask = self.relation_matrix[:, i].copy()
        mask[i] = False
        return frozenset(self._ordered(mask))

    def closed_downset(self, q: Element) -> FrozenSet[Element]:
        return frozenset(self._ordered(self.relation_matrix[:, self._require(q)]))

    def open_upset(self, q: Element) -> FrozenSet[Element]:
        i = self._require(q)
        mask = self.relation_matrix[i].copy()
        mask[i] = False
        return frozenset(self._ordered(mask))

    def closed_upset(self, q: Element) -> FrozenSet[Element]:
        return frozenset(self._ordered(self.relation_matrix[self._require(q)]))

    def minima(self) -> Tuple[Element, ...]:
        """Minimal elements in canonical order."""
        return tuple(e for e in self.canonical_order if not self.lower_covers[self.index[e]])

    def maxima(self) -> Tuple[Element, ...]:
        """Maximal elements in canonical order."""
        return tuple(e for e in self.canonical_order if not self.upper_covers[self.index[e]])

    def components(self, subset: Iterable[Element]) -> List[FrozenSet[Element]]:
        """
        Connected components of the full subposet on subset.

        Two elements are adjacent when they are comparable; components are
        listed by the canonical position of their first element.
        """
        chosen = set(subset)
        for e in chosen:
            self._require(e)
        chosen = sorted(chosen, key=self.rank_of.__getitem__)
        if not chosen:
            return []
        idx = np.array([self.index[e] for e in chosen])
        sub = self.relation_matrix[np.ix_(idx, idx)]
        count, labels = connected_components(csr_matrix(sub), directed=False)
        groups: List[List[Element]] = [[] for _ in range(count)]
        for k, label in enumerate(labels):
            groups[label].append(chosen[k])
        groups.sort(key=lambda g: self.rank_of[g[0]])
        return [frozenset(g) for g in groups]

    def is_connected(self) -> bool:
        return len(self.components(self.elements)) == 1
