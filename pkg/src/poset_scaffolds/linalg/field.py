"""
Exact dense linear algebra over a prime field.

Matrices are numpy int64 arrays whose entries are residues in [0, p). All
operations are classical (cubic) Gaussian elimination and multiplication;
every result is reduced modulo p, so identical inputs give identical outputs.
"""

from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

import logging

import numpy as np
from sympy import isprime

from ..exceptions import FieldError, NotInSpanError

logger = logging.getLogger(__name__)

# Column chunk for products whose accumulated sums could overflow int64
_CHUNK = 1 << 15
_LOW_BITS = 16


@dataclass(frozen=True)
class EchelonForm:
    """Reduced row echelon form E of A together with an invertible T with T·A = E."""

    echelon: np.ndarray
    transform: Optional[np.ndarray]
    pivots: Tuple[int, ...]

    @property
    def rank(self) -> int:
        return len(self.pivots)


@dataclass(frozen=True)
class PrimeField:
    """The field Z/pZ and the matrix operations used throughout the package."""

    p: int

    def __post_init__(self):
        if not isprime(self.p):
            raise FieldError(f"field modulus {self.p} is not prime")
        if self.p >= 2**31:
            raise FieldError(f"field modulus {self.p} exceeds 2^31 - 1")

    # -- construction -------------------------------------------------------

    def array(self, data) -> np.ndarray:
        """Coerce data to a 2-d int64 array reduced modulo p."""
        arr = np.array(data, dtype=np.int64)
        if arr.ndim == 1:
            arr = arr.reshape(-1, 1)
        return np.mod(arr, self.p)

    def zeros(self, rows: int, cols: int) -> np.ndarray:
        return np.zeros((rows, cols), dtype=np.int64)

    def identity(self, n: int) -> np.ndarray:
        return np.eye(n, dtype=np.int64)

    def from_sparse(
        self, rows: int, cols: int, entries: Sequence[Tuple[int, int, int]]
    ) -> np.ndarray:
        """Dense matrix from (row, col, value) triples; repeated positions add up."""
        out = self.zeros(rows, cols)
        for i, j, value in entries:
            out[i, j] = (out[i, j] + value) % self.p
        return out

    def random_matrix(
        self, rng: np.random.Generator, rows: int, cols: int, density: float = 1.0
    ) -> np.ndarray:
        values = rng.integers(0, self.p, size=(rows, cols), dtype=np.int64)
        if density < 1.0:
            values[rng.random(size=(rows, cols)) >= density] = 0
        return values

    # -- scalars --------------------------------------------------------------

    def reduce(self, a):
        return np.mod(a, self.p)

    def inv(self, a: int) -> int:
        a = int(a) % self.p
        if a == 0:
            raise ZeroDivisionError("zero has no inverse")
        return pow(a, -1, self.p)

    def neg(self, A: np.ndarray) -> np.ndarray:
        return np.mod(-A, self.p)

    # -- products ---------------------------------------------------------------

    def multiply(self, A: np.ndarray, B: np.ndarray) -> np.ndarray:
        """A·B modulo p without int64 overflow."""
        A = np.asarray(A, dtype=np.int64)
        B = np.asarray(B, dtype=np.int64)
        if A.shape[1] != B.shape[0]:
            raise ValueError(f"shape mismatch {A.shape} x {B.shape}")
        inner = A.shape[1]
        if inner == 0 or A.shape[0] == 0 or B.shape[1] == 0:
            return self.zeros(A.shape[0], B.shape[1])
        if (self.p - 1) ** 2 * inner < 2**63:
            return np.mod(A @ B, self.p)

        low = B & ((1 << _LOW_BITS) - 1)
        high = B >> _LOW_BITS
        out = self.zeros(A.shape[0], B.shape[1])
        for start in range(0, inner, _CHUNK):
            block = A[:, start:start + _CHUNK]
            part_low = np.mod(block @ low[start:start + _CHUNK], self.p)
            part_high = np.mod(block @ high[start:start + _CHUNK], self.p)
            part_high = np.mod(part_high << _LOW_BITS, self.p)
            out = np.mod(out + part_low + part_high, self.p)
        return out

    def chain(self, *matrices: np.ndarray) -> np.ndarray:
        """Product of several matrices, left to right."""
        out = matrices[0]
        for M in matrices[1:]:
            out = self.multiply(out, M)
        return out

    # -- elimination --------------------------------------------------------------

    def _reduce_rows(self, M: np.ndarray, ncols: int) -> Tuple[np.ndarray, List[int]]:
        """In-place Gauss–Jordan elimination on the first ncols columns of M."""
        p = self.p
        pivots: List[int] = []
        row = 0
        nrows = M.shape[0]
        for col in range(ncols):
            if row == nrows:
                break
            nonzero = np.flatnonzero(M[row:, col])
            if nonzero.size == 0:
                continue
            found = row + int(nonzero[0])
            if found != row:
                M[[row, found]] = M[[found, row]]
            scale = pow(int(M[row, col]), -1, p)
            M[row] = np.mod(M[row] * scale, p)
            factors = M[:, col].copy()
            factors[row] = 0
            targets = np.flatnonzero(factors)
            if targets.size:
                M[targets] = np.mod(
                    M[targets] - np.outer(factors[targets], M[row]) % p, p
                )
            pivots.append(col)
            row += 1
        return M, pivots

    def row_echelon(self, A: np.ndarray, with_transform: bool = True) -> EchelonForm:
        """Reduced row echelon form of A, with T such that T·A equals it."""
        A = self.array(A)
        rows, cols = A.shape
        if with_transform:
            work = np.concatenate([A, self.identity(rows)], axis=1)
        else:
            work = A.copy()
        work, pivots = self._reduce_rows(work, cols)
        echelon = work[:, :cols]
        transform = work[:, cols:] if with_transform else None
        return EchelonForm(echelon=echelon, transform=transform, pivots=tuple(pivots))

    def rank(self, A: np.ndarray) -> int:
        A = np.asarray(A)
        if A.size == 0:
            return 0
        return self.row_echelon(A, with_transform=False).rank

    def kernel_basis(self, A: np.ndarray) -> np.ndarray:
        """
        Basis of the null space of A as the columns of a matrix.

        The columns are in echelon form with respect to the standard basis: the
        index of the first nonzero entry strictly increases from column to column.
        """
        A = self.array(A)
        rows, cols = A.shape
        if cols == 0:
            return self.zeros(0, 0)
        if rows == 0:
            return self.identity(cols)
        ech = self.row_echelon(A, with_transform=False)
        pivot_set = set(ech.pivots)
        free = [j for j in range(cols) if j not in pivot_set]
        if not free:
            return self.zeros(cols, 0)
        K = self.zeros(cols, len(free))
        for k, j in enumerate(free):
            K[j, k] = 1
            for i, pc in enumerate(ech.pivots):
                K[pc, k] = (-ech.echelon[i, j]) % self.p
        # Re-echelonize so the leading indices increase.
        basis = self.row_echelon(K.T, with_transform=False)
        return basis.echelon[: basis.rank].T.copy()

    def image_basis(self, A: np.ndarray) -> Tuple[np.ndarray, Tuple[int, ...]]:
        """Echelon basis of the column span of A and the leading index of each column."""
        A = self.array(A)
        if A.shape[1] == 0:
            return self.zeros(A.shape[0], 0), ()
        ech = self.row_echelon(A.T, with_transform=False)
        return ech.echelon[: ech.rank].T.copy(), ech.pivots

    @staticmethod
    def complement_indices(pivots: Sequence[int], n: int) -> List[int]:
        """Indices in range(n) that are not pivots."""
        taken = set(pivots)
        return [j for j in range(n) if j not in taken]

    def solve_in_span(self, B: np.ndarray, v: np.ndarray) -> np.ndarray:
        """Coordinates x with B·x = v; raises NotInSpanError when v is not in span(B)."""
        B = self.array(B)
        v = self.array(np.asarray(v).reshape(-1, 1))
        if v.shape[0] != B.shape[0]:
            raise ValueError(f"vector of length {v.shape[0]} against {B.shape[0]} rows")
        ncols = B.shape[1]
        work, pivots = self._reduce_rows(np.concatenate([B, v], axis=1), ncols + 1)
        if pivots and pivots[-1] == ncols:
            raise NotInSpanError("vector is not in the column span")
        x = np.zeros(ncols, dtype=np.int64)
        for i, col in enumerate(pivots):
            x[col] = work[i, ncols]
        return x

    def inverse(self, A: np.ndarray) -> np.ndarray:
        A = self.array(A)
        n = A.shape[0]
        if A.shape[1] != n:
            raise ValueError(f"cannot invert a {A.shape} matrix")
        ech = self.row_echelon(A)
        if ech.rank != n:
            raise ValueError("matrix is singular")
        return ech.transform

    def is_zero(self, A: np.ndarray) -> bool:
        return not np.any(np.mod(A, self.p))

    def equal(self, A: np.ndarray, B: np.ndarray) -> bool:
        A = np.asarray(A)
        B = np.asarray(B)
        return A.shape == B.shape and not np.any(np.mod(A - B, self.p))
