"""Dense matrix arithmetic over GF(q^2).

Plain Gaussian elimination with deterministic pivoting (first nonzero
entry scanning down from the current row), which keeps reduced forms
reproducible across runs.  Matrices at this scale (n <= 729) make cubic
elimination instantaneous; entries are stored as canonical element
indices in a numpy int16 array and all row operations are vectorized
through the field's lookup tables.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

from .errors import ShapeMismatch, SingularMatrix
from .gf import FieldSpec


def as_vector(spec: FieldSpec, values: Sequence[int] | np.ndarray) -> np.ndarray:
    """Validate and convert a sequence of element indices to an int16 vector."""
    vec = np.asarray(values, dtype=np.int16)
    if vec.ndim != 1:
        raise ShapeMismatch(f"expected a 1-D vector, got shape {vec.shape}")
    if vec.size and (vec.min() < 0 or vec.max() >= spec.order):
        raise ShapeMismatch(f"vector entries must be element indices in [0, {spec.order})")
    return vec


@dataclass(eq=False)
class Matrix:
    """Row-major matrix of field element indices."""

    spec: FieldSpec
    data: np.ndarray = field(repr=False)

    def __post_init__(self) -> None:
        self.data = np.asarray(self.data, dtype=np.int16)
        if self.data.ndim != 2:
            raise ShapeMismatch(f"expected a 2-D array, got shape {self.data.shape}")
        if self.data.size and (self.data.min() < 0 or self.data.max() >= self.spec.order):
            raise ShapeMismatch(f"entries must be element indices in [0, {self.spec.order})")

    @classmethod
    def from_rows(cls, spec: FieldSpec, rows: Sequence[Sequence[int]]) -> "Matrix":
        return cls(spec, np.array(rows, dtype=np.int16))

    @classmethod
    def zeros(cls, spec: FieldSpec, rows: int, cols: int) -> "Matrix":
        return cls(spec, np.zeros((rows, cols), dtype=np.int16))

    @classmethod
    def identity(cls, spec: FieldSpec, n: int) -> "Matrix":
        return cls(spec, np.eye(n, dtype=np.int16))

    @property
    def rows(self) -> int:
        return self.data.shape[0]

    @property
    def cols(self) -> int:
        return self.data.shape[1]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.spec.q == other.spec.q and np.array_equal(self.data, other.data)

    def __repr__(self) -> str:  # pragma: no cover
        return f"Matrix(q={self.spec.q}, shape={self.data.shape})"


def _eliminate(spec: FieldSpec, work: np.ndarray, reduced: bool) -> list[int]:
    """In-place elimination; returns the pivot column list.

    Pivot rows are normalized to leading 1.  With ``reduced`` the result
    is the full reduced row echelon form, otherwise only entries below
    pivots are cleared.
    """
    add_t, mul_t = spec.add_table, spec.mul_table
    neg_t, inv_t = spec.neg_table, spec.inv_table
    n_rows, n_cols = work.shape
    pivots: list[int] = []
    r = 0
    for c in range(n_cols):
        if r >= n_rows:
            break
        col = work[r:, c]
        nz = np.nonzero(col)[0]
        if nz.size == 0:
            continue
        p = r + int(nz[0])
        if p != r:
            work[[r, p]] = work[[p, r]]
        work[r] = mul_t[inv_t[work[r, c]], work[r]]
        if reduced:
            targets = np.nonzero(work[:, c])[0]
            targets = targets[targets != r]
        else:
            targets = r + 1 + np.nonzero(work[r + 1 :, c])[0]
        if targets.size:
            factors = neg_t[work[targets, c]]
            work[targets] = add_t[work[targets], mul_t[factors[:, None], work[r][None, :]]]
        pivots.append(c)
        r += 1
    return pivots


def rank(m: Matrix) -> int:
    """Row rank via Gaussian elimination over the field."""
    work = m.data.copy()
    return len(_eliminate(m.spec, work, reduced=False))


def solve(a: Matrix, b: Sequence[int] | np.ndarray) -> np.ndarray:
    """Solve A x = b for square nonsingular A; raises SingularMatrix otherwise."""
    if a.rows != a.cols:
        raise ShapeMismatch(f"solve requires a square matrix, got {a.rows}x{a.cols}")
    rhs = as_vector(a.spec, b)
    if rhs.size != a.rows:
        raise ShapeMismatch(f"rhs length {rhs.size} != {a.rows}")
    work = np.hstack([a.data.copy(), rhs[:, None]])
    pivots = _eliminate(a.spec, work, reduced=True)
    if len(pivots) != a.cols or pivots != list(range(a.cols)):
        raise SingularMatrix("matrix is singular")
    return work[:, a.cols].copy()


def inverse(a: Matrix) -> Matrix:
    """Inverse of a square nonsingular matrix."""
    if a.rows != a.cols:
        raise ShapeMismatch(f"inverse requires a square matrix, got {a.rows}x{a.cols}")
    work = np.hstack([a.data.copy(), np.eye(a.rows, dtype=np.int16)])
    pivots = _eliminate(a.spec, work, reduced=True)
    if len(pivots) != a.cols or pivots != list(range(a.cols)):
        raise SingularMatrix("matrix is singular")
    return Matrix(a.spec, work[:, a.cols :].copy())


def nullspace(a: Matrix) -> Matrix:
    """Basis of {x : A x = 0}, one vector per row (may have zero rows)."""
    spec = a.spec
    work = a.data.copy()
    pivots = _eliminate(spec, work, reduced=True)
    free = [c for c in range(a.cols) if c not in pivots]
    basis = np.zeros((len(free), a.cols), dtype=np.int16)
    for row, f in enumerate(free):
        basis[row, f] = 1
        for i, p in enumerate(pivots):
            basis[row, p] = spec.neg_table[work[i, f]]
    return Matrix(spec, basis)


def mul_matrix(a: Matrix, b: Matrix) -> Matrix:
    """Matrix product over the field."""
    if a.cols != b.rows:
        raise ShapeMismatch(f"cannot multiply {a.rows}x{a.cols} by {b.rows}x{b.cols}")
    add_t, mul_t = a.spec.add_table, a.spec.mul_table
    out = np.zeros((a.rows, b.cols), dtype=np.int16)
    for j in range(a.cols):
        out = add_t[out, mul_t[a.data[:, j][:, None], b.data[j, :][None, :]]]
    return Matrix(a.spec, out)


def mul_vec(a: Matrix, x: Sequence[int] | np.ndarray) -> np.ndarray:
    """Matrix-vector product A x."""
    vec = as_vector(a.spec, x)
    if vec.size != a.cols:
        raise ShapeMismatch(f"vector length {vec.size} != {a.cols}")
    add_t, mul_t = a.spec.add_table, a.spec.mul_table
    out = np.zeros(a.rows, dtype=np.int16)
    for j in range(a.cols):
        out = add_t[out, mul_t[vec[j], a.data[:, j]]]
    return out


def transpose(a: Matrix) -> Matrix:
    return Matrix(a.spec, a.data.T.copy())


def submatrix_rows(a: Matrix, indices: Iterable[int]) -> Matrix:
    """Rows of A selected by ``indices``, in the given order."""
    idx = list(indices)
    if any(i < 0 or i >= a.rows for i in idx):
        raise ShapeMismatch(f"row indices must lie in [0, {a.rows})")
    return Matrix(a.spec, a.data[idx].copy())
