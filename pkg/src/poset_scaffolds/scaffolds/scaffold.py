"""
The Scaffold type and the brute-force checks used to verify scaffolds.

An initial scaffold of Q keeps the minima of Q, the essential points (those
whose open downset is disconnected) and, for every such point p and every
component of its open downset, exactly one relation m < p from a minimum m in
that component. A final scaffold is the same structure on the opposite order.
"""

from dataclasses import dataclass, field
from typing import Any, Callable, Dict, FrozenSet, List, Literal, Optional, Tuple

import logging

from ..posets.grid import GridInterval, grid_leq
from ..posets.poset import Element, Poset

logger = logging.getLogger(__name__)

Direction = Literal["initial", "final"]


@dataclass(frozen=True)
class Scaffold:
    """
    A minimal initial (or final) subposet.

    relations holds pairs (m, p) where m is a minimum of Q below p (initial),
    or a maximum of Q above p (final). Only non-identity relations are stored.
    """

    direction: Direction
    elements: Tuple[Element, ...]
    relations: Tuple[Tuple[Element, Element], ...]
    parent: Any = field(default=None, compare=False, repr=False)

    def __post_init__(self):
        if self.direction not in ("initial", "final"):
            raise ValueError(f"direction must be 'initial' or 'final', got {self.direction!r}")
        object.__setattr__(self, "elements", tuple(self.elements))
        object.__setattr__(self, "relations", tuple(tuple(r) for r in self.relations))

    @property
    def extrema(self) -> Tuple[Element, ...]:
        """Minima (initial) or maxima (final) of the parent, in element order."""
        uppers = {p for _, p in self.relations}
        return tuple(e for e in self.elements if e not in uppers)

    @property
    def order_relations(self) -> Tuple[Tuple[Element, Element], ...]:
        """Relations as (lower, upper) pairs in the order of the parent."""
        if self.direction == "initial":
            return self.relations
        return tuple((p, w) for w, p in self.relations)

    def sources(self) -> Dict[Element, Tuple[Element, ...]]:
        """Map each element to the extrema it is related to."""
        out: Dict[Element, List[Element]] = {e: [] for e in self.elements}
        for m, p in self.relations:
            out[p].append(m)
        return {e: tuple(v) for e, v in out.items()}

    def order(self) -> Optional[Callable[[Element, Element], bool]]:
        """Comparison in the parent poset, when the parent is known."""
        if isinstance(self.parent, Poset):
            return self.parent.leq
        if isinstance(self.parent, GridInterval):
            return grid_leq
        return None

    def max_relations_per_element(self) -> int:
        return max((len(v) for v in self.sources().values()), default=0)

    def __len__(self) -> int:
        return len(self.elements)


def _oriented(Q: Poset, direction: Direction) -> Poset:
    return Q if direction == "initial" else Q.opposite()


def _open_downset_components(Q: Poset, q: Element) -> List[FrozenSet[Element]]:
    return Q.components(Q.open_downset(q))


def brute_force_essential(Q: Poset) -> FrozenSet[Element]:
    """I_Q: elements whose open downset is disconnected (the empty set counts)."""
    return frozenset(q for q in Q.elements if len(_open_downset_components(Q, q)) != 1)


def full_initial_subposet(Q: Poset) -> Poset:
    """The full subposet on I_Q; initial, and contained in every full initial subposet."""
    return Q.full_subposet(brute_force_essential(Q))


def scaffold_as_poset(P: Scaffold) -> Poset:
    """The scaffold as a poset in its own right, with the parent's direction of order."""
    return Poset.from_relations(P.elements, P.order_relations)


def _relation_rule_holds(P: Scaffold, Q: Poset) -> bool:
    minima = set(Q.minima())
    seen = set()
    for rel in P.relations:
        if rel in seen:
            logger.debug(f"duplicate relation {rel}")
            return False
        seen.add(rel)
        m, p = rel
        if m not in minima or m not in Q or p not in Q or not Q.less(m, p):
            logger.debug(f"relation {rel} is not of the form minimum < element")
            return False

    sources = P.sources()
    for p in P.elements:
        comps = _open_downset_components(Q, p)
        chosen = sources.get(p, ())
        if len(chosen) != len(comps):
            logger.debug(f"{p!r}: {len(chosen)} relations for {len(comps)} components")
            return False
        for comp in comps:
            if sum(1 for m in chosen if m in comp) != 1:
                logger.debug(f"{p!r}: a component of its downset does not get exactly one relation")
                return False
    return True


def _is_initial_inclusion(P: Scaffold, Q: Poset) -> bool:
    sub = Poset(P.elements, P.relations)
    members = set(P.elements)
    for q in Q.elements:
        below = [e for e in Q.closed_downset(q) if e in members]
        if len(sub.components(below)) != 1:
            logger.debug(f"closed downset of {q!r} meets the scaffold in a disconnected set")
            return False
    return True


def verify_scaffold(P: Scaffold, Q: Poset) -> bool:
    """
    Check that P is an initial (or final) scaffold of Q.

    Three conditions: the element set is I_Q, every component of every open
    downset receives exactly one relation, and every closed downset meets P in
    a connected set (so the inclusion P -> Q is initial).
    """
    if not set(P.elements) <= set(Q.elements):
        return False
    oriented = _oriented(Q, P.direction)
    if set(P.elements) != brute_force_essential(oriented):
        logger.debug("scaffold elements differ from the essential set")
        return False
    return _relation_rule_holds(P, oriented) and _is_initial_inclusion(P, oriented)


def relabel(P: Scaffold, mapping: Dict[Element, Element], direction: Optional[Direction] = None,
            parent: Any = None) -> Scaffold:
    """Apply an element renaming to a scaffold, keeping elements sorted by the new names."""
    elements = tuple(sorted(mapping[e] for e in P.elements))
    relations = tuple(sorted((mapping[m], mapping[p]) for m, p in P.relations))
    return Scaffold(direction or P.direction, elements, relations, parent=parent)

