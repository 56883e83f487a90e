"""
Free modules as grade-labeled matrices, and (Q,r)-complexes X -> Y -> Z.

A grade is either an element of a finite poset or a grid point. Comparison of
grades goes through an order oracle ``leq(a, b)``, so the same code serves
both kinds of ambient poset.
"""

from dataclasses import dataclass
from typing import Callable, Hashable, List, Sequence, Tuple, Union

import logging

import numpy as np

from ..exceptions import ComplexError
from ..linalg.field import PrimeField
from ..posets.grid import GridInterval, grid_leq
from ..posets.poset import Poset
from ..scaffolds.general import initial_scaffold_general
from ..scaffolds.grid import initial_scaffold_grid

logger = logging.getLogger(__name__)

Grade = Hashable
Order = Callable[[Grade, Grade], bool]


def order_oracle(ambient: Union[Poset, GridInterval, None]) -> Order:
    """Grade comparison for a finite poset, or coordinatewise for grids."""
    if isinstance(ambient, Poset):
        return ambient.leq
    return grid_leq


def fiber_indices(grades: Sequence[Grade], p: Grade, leq: Order) -> List[int]:
    """Positions of the generators whose grade is ≤ p."""
    return [i for i, g in enumerate(grades) if leq(g, p)]


@dataclass(frozen=True)
class LabeledMatrix:
    """A matrix between free modules, rows and columns labeled by generator grades."""

    row_grades: Tuple[Grade, ...]
    col_grades: Tuple[Grade, ...]
    entries: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "row_grades", tuple(self.row_grades))
        object.__setattr__(self, "col_grades", tuple(self.col_grades))
        entries = np.asarray(self.entries, dtype=np.int64).reshape(
            len(self.row_grades), len(self.col_grades)
        )
        object.__setattr__(self, "entries", entries)

    @property
    def shape(self) -> Tuple[int, int]:
        return self.entries.shape

    def check_labels(self, leq: Order) -> None:
        """Nonzero entries must go from a row grade to a column grade above it."""
        for i, j in np.argwhere(self.entries):
            if not leq(self.row_grades[i], self.col_grades[j]):
                raise ComplexError(
                    f"entry ({i}, {j}) is nonzero but row grade {self.row_grades[i]!r} "
                    f"is not below column grade {self.col_grades[j]!r}"
                )


def restrict_free(M: LabeledMatrix, p: Grade, leq: Order = grid_leq) -> np.ndarray:
    """The fiber matrix at p: rows and columns whose labels are ≤ p."""
    rows = fiber_indices(M.row_grades, p, leq)
    cols = fiber_indices(M.col_grades, p, leq)
    return M.entries[np.ix_(rows, cols)]


@dataclass(frozen=True)
class QrComplex:
    """
    A chain complex X --f--> Y --g--> Z of free modules.

    f has one row per Y generator and one column per X generator; g has one
    row per Z generator and one column per Y generator.
    """

    field: PrimeField
    f: LabeledMatrix
    g: LabeledMatrix

    def __post_init__(self):
        if self.f.row_grades != self.g.col_grades:
            raise ComplexError("the Y grades of f and g disagree")
        object.__setattr__(self, "f", LabeledMatrix(self.f.row_grades, self.f.col_grades,
                                                    self.field.reduce(self.f.entries)))
        object.__setattr__(self, "g", LabeledMatrix(self.g.row_grades, self.g.col_grades,
                                                    self.field.reduce(self.g.entries)))

    @property
    def x_grades(self) -> Tuple[Grade, ...]:
        return self.f.col_grades

    @property
    def y_grades(self) -> Tuple[Grade, ...]:
        return self.f.row_grades

    @property
    def z_grades(self) -> Tuple[Grade, ...]:
        return self.g.row_grades

    @property
    def total_rank(self) -> int:
        return len(self.x_grades) + len(self.y_grades) + len(self.z_grades)

    def check(self, leq: Order) -> None:
        """Raise ComplexError unless labels are compatible and g∘f = 0."""
        self.f.check_labels(leq)
        self.g.check_labels(leq)
        if not self.field.is_zero(self.field.multiply(self.g.entries, self.f.entries)):
            raise ComplexError("g∘f is not zero")

    @classmethod
    def free_presentation(
        cls,
        field: PrimeField,
        x_grades: Sequence[Grade],
        y_grades: Sequence[Grade],
        f_entries,
    ) -> "QrComplex":
        """The complex X -> Y -> 0, whose homology is the cokernel of f."""
        y_grades = tuple(y_grades)
        f = LabeledMatrix(y_grades, tuple(x_grades), f_entries)
        g = LabeledMatrix((), y_grades, np.zeros((0, len(y_grades)), dtype=np.int64))
        return cls(field, f, g)

    @classmethod
    def interval_presentation(
        cls, Q: Union[Poset, GridInterval], field: PrimeField, algo: str = "auto"
    ) -> "QrComplex":
        """
        A free presentation of the interval module k^Q.

        One Y generator per minimum. For every essential point with scaffold
        relations from minima l1, ..., lk there are X generators l_i - l_{i+1},
        which identify the generators of each connected region. For grid
        intervals, an X generator at each cogenerator kills the module outside Q.
        """
        if isinstance(Q, Poset):
            scaffold = initial_scaffold_general(Q)
            kills: List[Tuple[Grade, Grade]] = []
        else:
            upset_form = Q.to_upset_presentation()
            scaffold = initial_scaffold_grid(
                GridInterval(Q.d, Q.minima, cogenerators=()), algo
            )
            kills = []
            for c in upset_form.cogenerators:
                below = next(m for m in Q.minima if grid_leq(m, c))
                kills.append((below, c))

        minima = scaffold.extrema
        position = {m: i for i, m in enumerate(minima)}
        columns: List[Tuple[Grade, List[Tuple[int, int]]]] = []
        for q, sources in scaffold.sources().items():
            for a, b in zip(sources, sources[1:]):
                columns.append((q, [(position[a], 1), (position[b], field.p - 1)]))
        for m, c in kills:
            columns.append((c, [(position[m], 1)]))

        entries = np.zeros((len(minima), len(columns)), dtype=np.int64)
        for j, (_, column) in enumerate(columns):
            for i, value in column:
                entries[i, j] = value
        return cls.free_presentation(field, [q for q, _ in columns], minima, entries)
