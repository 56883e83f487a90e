"""
Initial and final scaffolds of arbitrary finite posets.

Elements are processed in canonical (topological) order. For each q the open
downset is collected by a breadth-first search along lower covers, split into
connected components of the Hasse edges inside it, and q is kept when the
number of components is not one. Each component contributes one relation from
its first element in canonical order, which is always a minimum of Q.
"""

from typing import List, Tuple

import logging

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import breadth_first_order, connected_components

from ..posets.poset import Element, Poset
from .scaffold import Direction, Scaffold

logger = logging.getLogger(__name__)


def _edge_array(Q: Poset) -> np.ndarray:
    """Hasse edges (lower, upper) as an m x 2 index array."""
    return np.asarray(Q.edge_indices, dtype=np.int64).reshape(-1, 2)


def _downward_graph(Q: Poset, edges: np.ndarray) -> csr_matrix:
    """Directed graph with an arc from each element to each of its lower covers."""
    n = len(Q)
    return csr_matrix((np.ones(len(edges), dtype=bool), (edges[:, 1], edges[:, 0])), shape=(n, n))


def _downset_indices(down: csr_matrix, q: int) -> np.ndarray:
    reached = breadth_first_order(down, q, directed=True, return_predecessors=False)
    return reached[1:]


def _downset_components(n: int, edges: np.ndarray, members: np.ndarray) -> List[np.ndarray]:
    """Components of the induced Hasse graph on a downset."""
    if not len(members):
        return []
    local = np.full(n, -1, dtype=np.int64)
    local[members] = np.arange(len(members))
    a, b = local[edges[:, 0]], local[edges[:, 1]]
    inside = (a >= 0) & (b >= 0)
    k = len(members)
    graph = csr_matrix((np.ones(int(inside.sum()), dtype=bool), (a[inside], b[inside])), shape=(k, k))
    count, labels = connected_components(graph, directed=False)
    return [members[labels == c] for c in range(count)]


def _scaffold_of(Q: Poset, direction: Direction, parent) -> Scaffold:
    rank = Q.rank_of
    position = np.array([rank[e] for e in Q.elements], dtype=np.int64)
    edges = _edge_array(Q)
    down = _downward_graph(Q, edges)
    elements: List[Element] = []
    relations: List[Tuple[Element, Element]] = []

    for q in Q.canonical_order:
        members = _downset_indices(down, Q.index[q])
        components = _downset_components(len(Q), edges, members)
        if len(components) == 1:
            continue
        elements.append(q)
        reps = sorted(
            (Q.elements[int(comp[np.argmin(position[comp])])] for comp in components),
            key=rank.__getitem__,
        )
        relations.extend((m, q) for m in reps)

    logger.info(
        f"{direction.capitalize()} scaffold: {len(elements)} of {len(Q)} elements, "
        f"{len(relations)} relations"
    )
    return Scaffold(direction, tuple(elements), tuple(relations), parent=parent)


def initial_scaffold_general(Q: Poset) -> Scaffold:
    """Initial scaffold with the canonical representative in every downset component."""
    return _scaffold_of(Q, "initial", Q)


def final_scaffold_general(Q: Poset) -> Scaffold:
    """Final scaffold: the initial scaffold of the opposite poset, relations stored as (w, p)."""
    return _scaffold_of(Q.opposite(), "final", Q)
