import itertools

import numpy as np
import pytest

from cechkit.fplinalg import (
    F2,
    DimensionMismatch,
    FMatrix,
    NotASubspace,
    NotPrime,
    PrimeField,
    kernel_basis,
    quotient_dim,
    rank_nullity,
    solve_linear,
)


def brute_force_image_size(a: np.ndarray, p: int) -> int:
    """Count distinct images of A over all input vectors; equals p^rank."""
    seen = set()
    for vec in itertools.product(range(p), repeat=a.shape[1]):
        seen.add(tuple((a @ np.array(vec)) % p))
    return len(seen)


def test_prime_validation():
    PrimeField(2)
    PrimeField(13)
    for bad in (0, 1, 4, 9, 15):
        with pytest.raises(NotPrime):
            PrimeField(bad)


def test_rank_nullity_trivial():
    assert rank_nullity(FMatrix.zeros(3, 3, F2)) == (0, 3)
    assert rank_nullity(FMatrix.identity(4, F2)) == (4, 0)


def test_rank_against_brute_force_image():
    # coboundary of the 4-cycle, transposed orientation irrelevant for rank
    a = np.array([[1, 1, 0, 0], [0, 1, 1, 0], [0, 0, 1, 1], [1, 0, 0, 1]])
    m = FMatrix(a, F2)
    assert 2 ** m.rank() == brute_force_image_size(a, 2)
    assert m.rank() == 3


def test_rank_equals_transpose_rank():
    rng = np.random.default_rng(7)
    for p in (2, 3, 5):
        field = PrimeField(p)
        for _ in range(20):
            a = rng.integers(0, p, size=(4, 6))
            m = FMatrix(a, field)
            assert m.rank() == m.T.rank()


def test_kernel_basis():
    assert kernel_basis(FMatrix.identity(3, F2)).cols == 0
    z = kernel_basis(FMatrix.zeros(2, 5, F2))
    assert z.cols == 5
    a = FMatrix(np.array([[1, 1, 0], [0, 1, 1]]), F2)
    k = kernel_basis(a)
    assert k.cols == 1
    assert not (a @ k).entries.any()


def test_kernel_vectors_annihilated_everywhere():
    rng = np.random.default_rng(3)
    for p in (2, 5):
        field = PrimeField(p)
        a = FMatrix(rng.integers(0, p, size=(3, 5)), field)
        k = a.kernel_basis()
        assert a.rank_nullity()[1] == k.cols
        assert not (a @ k).entries.any()


def test_solve_identity_and_unsolvable():
    b = np.array([1, 0, 1])
    assert np.array_equal(FMatrix.identity(3, F2).solve(b), b)
    assert FMatrix.zeros(3, 3, F2).solve(np.array([1, 0, 0])) is None
    assert solve_linear(FMatrix.zeros(2, 2, F2), np.zeros(2, dtype=int)) is not None


def test_solve_cross_checked_by_rank():
    rng = np.random.default_rng(11)
    for p in (2, 3):
        field = PrimeField(p)
        for _ in range(30):
            a = FMatrix(rng.integers(0, p, size=(4, 4)), field)
            b = rng.integers(0, p, size=4)
            x = a.solve(b)
            aug = FMatrix(np.column_stack([a.entries, b]), field)
            consistent = aug.rank() == a.rank()
            assert (x is not None) == consistent
            if x is not None:
                assert np.array_equal((a.entries @ x) % p, b % p)


def test_solve_dimension_mismatch():
    with pytest.raises(DimensionMismatch):
        FMatrix.identity(3, F2).solve(np.array([1, 0]))


def test_quotient_dim():
    z = FMatrix(np.array([[1, 0], [0, 1], [0, 0]]), F2)
    b = FMatrix(np.array([[1], [1], [0]]), F2)
    assert quotient_dim(z, b) == 1
    assert quotient_dim(z, z) == 0
    assert quotient_dim(z, FMatrix.zeros(3, 0, F2)) == 2
    outside = FMatrix(np.array([[0], [0], [1]]), F2)
    with pytest.raises(NotASubspace):
        quotient_dim(z, outside)


def test_inverse():
    field = PrimeField(5)
    a = FMatrix(np.array([[1, 2], [3, 4]]), field)
    inv = a.inverse()
    assert (a @ inv).equals(FMatrix.identity(2, field))
    with pytest.raises(ZeroDivisionError):
        FMatrix(np.array([[1, 1], [1, 1]]), F2).inverse()


def test_column_space_basis_deterministic():
    a = FMatrix(np.array([[1, 1, 0], [1, 1, 1]]), F2)
    cb = a.column_space_basis()
    assert cb.cols == 2
    assert np.array_equal(cb.entries[:, 0], [1, 1])


def test_determinism_repeated_runs():
    a = np.arange(30).reshape(5, 6)
    m = FMatrix(a, PrimeField(7))
    first = (m.rank_nullity(), m.kernel_basis().entries.tolist())
    for _ in range(3):
        again = FMatrix(a, PrimeField(7))
        assert (again.rank_nullity(), again.kernel_basis().entries.tolist()) == first
