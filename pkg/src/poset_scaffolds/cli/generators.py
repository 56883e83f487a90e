"""
Seeded random instances for benchmarks and tests.

Every generator takes a numpy Generator, so a seed fixes the whole instance.
"""

from math import comb
from typing import List, Optional, Sequence, Tuple

import logging

import numpy as np

from ..exceptions import IntervalError
from ..linalg.field import PrimeField
from ..modules.homology import homology_rep
from ..modules.labeled import LabeledMatrix, Order, QrComplex, fiber_indices
from ..modules.representation import ModuleRep
from ..posets.grid import GridInterval, GridPoint, as_point, grid_leq, join
from ..posets.poset import Poset

logger = logging.getLogger(__name__)


def random_poset(rng: np.random.Generator, n: int, density: float = 0.3) -> Poset:
    """Elements e0..e{n-1}; each pair i < j is related with the given probability."""
    elements = tuple(f"e{i}" for i in range(n))
    relations = [
        (elements[i], elements[j])
        for i in range(n) for j in range(i + 1, n) if rng.random() < density
    ]
    return Poset.from_relations(elements, relations)


def random_connected_poset(rng: np.random.Generator, n: int, density: float = 0.3) -> Poset:
    """A random poset made connected by relating e0 to the first element of every other component."""
    Q = random_poset(rng, n, density)
    components = Q.components(Q.elements)
    if len(components) == 1:
        return Q
    position = {e: i for i, e in enumerate(Q.elements)}
    first = Q.elements[0]
    extra = [
        (first, min(comp, key=position.get)) for comp in components if first not in comp
    ]
    return Poset.from_relations(Q.elements, list(Q.hasse_edges) + extra)


def random_antichain(rng: np.random.Generator, d: int, n: int) -> Tuple[GridPoint, ...]:
    """n distinct points on a hyperplane c_1 + ... + c_d = S, hence pairwise incomparable."""
    if d == 1:
        return ((int(rng.integers(0, 8)),),)
    total = 1
    while comb(total + d - 1, d - 1) < 4 * n:
        total += 1
    chosen = set()
    while len(chosen) < n:
        cuts = np.sort(rng.integers(0, total + 1, size=(2 * n, d - 1)), axis=1)
        padded = np.concatenate(
            [np.zeros((2 * n, 1), dtype=np.int64), cuts, np.full((2 * n, 1), total, dtype=np.int64)],
            axis=1,
        )
        for p in np.diff(padded, axis=1):
            chosen.add(as_point(p))
            if len(chosen) == n:
                break
    return tuple(sorted(chosen))


def random_grid_interval(rng: np.random.Generator, d: int, n: int, height: int = 3) -> GridInterval:
    """
    A finite connected interval with n minima, given by extrema.

    Every minimum, and the join of every lexicographically consecutive pair of
    minima, gets a maximum above it at a random offset of at most height. The
    consecutive joins chain all minima together.
    """
    minima = random_antichain(rng, d, n)
    anchors = list(minima) + [join(a, b) for a, b in zip(minima, minima[1:])]
    offsets = rng.integers(0, height + 1, size=(len(anchors), d))
    tops = [as_point(np.asarray(a) + off) for a, off in zip(anchors, offsets)]
    Q = GridInterval.from_extrema(minima, tops)
    if len(Q.minima) != len(minima):
        raise IntervalError("random minima are not an antichain")
    return Q


def random_upset(rng: np.random.Generator, d: int, n: int) -> GridInterval:
    """The upset generated by n random incomparable points (an infinite interval)."""
    return GridInterval(d, random_antichain(rng, d, n), cogenerators=())


def random_qr_complex(
    rng: np.random.Generator,
    field: PrimeField,
    grades: Sequence,
    leq: Order,
    ranks: Tuple[int, int, int] = (3, 3, 2),
    density: float = 0.7,
) -> QrComplex:
    """
    A random complex X -> Y -> Z with grades drawn from the given pool.

    g is random among label-compatible matrices; each column of f is a random
    vector of ker g supported on Y generators below its grade, so g∘f = 0.
    """
    nx, ny, nz = ranks

    def pick(k: int) -> list:
        return [grades[int(i)] for i in rng.integers(0, len(grades), size=k)]

    x_grades, y_grades, z_grades = pick(nx), pick(ny), pick(nz)

    g = field.random_matrix(rng, nz, ny, density)
    for i, zg in enumerate(z_grades):
        for j, yg in enumerate(y_grades):
            if not leq(zg, yg):
                g[i, j] = 0

    f = field.zeros(ny, nx)
    for j, xg in enumerate(x_grades):
        below = fiber_indices(y_grades, xg, leq)
        if not below:
            continue
        K = field.kernel_basis(g[:, below])
        if K.shape[1] == 0:
            continue
        coefficients = field.random_matrix(rng, K.shape[1], 1)
        f[below, j] = field.multiply(K, coefficients)[:, 0]

    return QrComplex(
        field,
        LabeledMatrix(tuple(y_grades), tuple(x_grades), f),
        LabeledMatrix(tuple(z_grades), tuple(y_grades), g),
    )


def random_module_rep(
    rng: np.random.Generator,
    field: PrimeField,
    Q: Poset,
    ranks: Tuple[int, int, int] = (3, 3, 2),
    relations: Optional[List[Tuple]] = None,
) -> ModuleRep:
    """A functorial representation over Q: the homology of a random complex graded by Q."""
    C = random_qr_complex(rng, field, Q.elements, Q.leq, ranks)
    return homology_rep(C, Q.canonical_order, Q.hasse_edges if relations is None else relations, Q.leq)


def grid_complex(
    rng: np.random.Generator, field: PrimeField, Q: GridInterval, r: int
) -> QrComplex:
    """A complex of total rank r graded by points of a materializable interval."""
    points = Q.points()
    nx = r // 3
    nz = r // 4
    return random_qr_complex(rng, field, points, grid_leq, (nx, r - nx - nz, nz))
