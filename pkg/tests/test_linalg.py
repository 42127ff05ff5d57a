"""Linear algebra over GF(q^2): elimination, solve, nullspace, products."""

import numpy as np
import pytest

from hopilab.agcode import build_code
from hopilab.errors import ShapeMismatch, SingularMatrix
from hopilab.gf import field_new
from hopilab.linalg import (
    Matrix,
    inverse,
    mul_matrix,
    mul_vec,
    nullspace,
    rank,
    solve,
    submatrix_rows,
    transpose,
)


def _random_matrix(spec, rows, cols, rng):
    return Matrix(spec, rng.integers(0, spec.order, size=(rows, cols), dtype=np.int16))


def _span_size(spec, m):
    """Independent rank oracle: enumerate the row span, |span| = order^rank."""
    vectors = {tuple([0] * m.cols)}
    for row in m.data:
        new = set()
        for v in vectors:
            for s in range(spec.order):
                new.add(tuple(int(spec.add_table[x, spec.mul_table[s, y]]) for x, y in zip(v, row)))
        vectors = new
    return len(vectors)


def test_rank_zero_and_identity():
    spec = field_new(2)
    assert rank(Matrix.zeros(spec, 3, 5)) == 0
    assert rank(Matrix.identity(spec, 4)) == 4


def test_rank_hermitian_eval_matrix():
    assert rank(build_code(2, 4).eval_matrix) == 4


def test_rank_matches_span_oracle():
    spec = field_new(2)
    rng = np.random.default_rng(101)
    for _ in range(20):
        m = _random_matrix(spec, 3, 4, rng)
        assert spec.order ** rank(m) == _span_size(spec, m)


def test_rank_equals_rank_of_transpose():
    rng = np.random.default_rng(5)
    for q in (2, 3):
        spec = field_new(q)
        for _ in range(15):
            m = _random_matrix(spec, rng.integers(1, 7), rng.integers(1, 7), rng)
            assert rank(m) == rank(transpose(m))


def test_solve_identity_and_scalar():
    spec = field_new(2)
    b = [3, 1, 2]
    assert list(solve(Matrix.identity(spec, 3), b)) == b
    # alpha * x = 1 over GF(4): x = alpha + 1
    assert list(solve(Matrix.from_rows(spec, [[2]]), [1])) == [3]


def test_solve_singular_raises():
    spec = field_new(2)
    singular = Matrix.from_rows(spec, [[1, 1], [1, 1]])
    with pytest.raises(SingularMatrix):
        solve(singular, [1, 0])


def test_solve_roundtrip_random_nonsingular():
    rng = np.random.default_rng(17)
    for q in (2, 3, 4):
        spec = field_new(q)
        found = 0
        while found < 10:
            a = _random_matrix(spec, 5, 5, rng)
            if rank(a) < 5:
                continue
            found += 1
            x = rng.integers(0, spec.order, size=5, dtype=np.int16)
            assert np.array_equal(solve(a, mul_vec(a, x)), x)


def test_inverse_roundtrip():
    spec = field_new(3)
    rng = np.random.default_rng(23)
    while True:
        a = _random_matrix(spec, 4, 4, rng)
        if rank(a) == 4:
            break
    assert mul_matrix(a, inverse(a)) == Matrix.identity(spec, 4)


def test_rank_nullity_and_kernel():
    rng = np.random.default_rng(31)
    for q in (2, 3):
        spec = field_new(q)
        for _ in range(10):
            a = _random_matrix(spec, 4, 6, rng)
            ns = nullspace(a)
            assert rank(a) + ns.rows == a.cols
            for row in ns.data:
                assert not mul_vec(a, row).any()


def test_product_identities():
    spec = field_new(3)
    rng = np.random.default_rng(47)
    a = _random_matrix(spec, 4, 5, rng)
    assert mul_matrix(a, Matrix.identity(spec, 5)) == a
    assert transpose(transpose(a)) == a
    assert submatrix_rows(a, range(a.rows)) == a


def test_mul_matrix_small_pinned():
    # [[1, alpha], [0, 1]] * [[alpha], [1]] = [[alpha + alpha], [1]] = [[0], [1]] over GF(4)
    spec = field_new(2)
    a = Matrix.from_rows(spec, [[1, 2], [0, 1]])
    b = Matrix.from_rows(spec, [[2], [1]])
    assert mul_matrix(a, b) == Matrix.from_rows(spec, [[0], [1]])


def test_shape_mismatch_errors():
    spec = field_new(2)
    a = Matrix.zeros(spec, 2, 3)
    with pytest.raises(ShapeMismatch):
        mul_matrix(a, Matrix.zeros(spec, 2, 2))
    with pytest.raises(ShapeMismatch):
        mul_vec(a, [0, 0])
    with pytest.raises(ShapeMismatch):
        solve(a, [0, 0])
    with pytest.raises(ShapeMismatch):
        submatrix_rows(a, [5])
    with pytest.raises(ShapeMismatch):
        Matrix.from_rows(spec, [[0, 9]])  # out-of-range entry
