from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from simplex_absorption import linalg
from simplex_absorption.errors import SingularMatrix

A_STD = [[0, 0, 1], [1, 0, 1], [0, 1, 1]]


def test_invert_identity():
    assert np.array_equal(linalg.invert(linalg.identity(3)), np.eye(3))


def test_invert_bordered_standard_triangle():
    L = linalg.invert(np.array(A_STD, dtype=float))
    np.testing.assert_allclose(L[:, 0], [-1, -1, 1])
    np.testing.assert_allclose(L[:, 1], [1, 0, 0])
    np.testing.assert_allclose(L[:, 2], [0, 1, 0])


def test_invert_rational_is_exact():
    m = linalg.as_matrix(A_STD, "rational")
    L = linalg.invert(m)
    assert L[0, 0] == Fraction(-1) and isinstance(L[0, 0], Fraction)
    prod = m.dot(L)
    assert all(prod[i, j] == (1 if i == j else 0) for i in range(3) for j in range(3))


def test_invert_random_residual():
    m = np.random.default_rng(1).normal(size=(4, 4))
    assert linalg.inf_norm(m @ linalg.invert(m) - np.eye(4)) < 1e-10


def test_singular_raises():
    with pytest.raises(SingularMatrix):
        linalg.invert(np.array([[1.0, 2.0], [2.0, 4.0]]))
    with pytest.raises(SingularMatrix):
        linalg.invert(linalg.as_matrix([[1, 2], [2, 4]], "rational"))


def test_determinant_examples():
    assert linalg.determinant(np.eye(4)) == pytest.approx(1.0)
    assert linalg.determinant(np.array(A_STD, dtype=float)) == pytest.approx(1.0)
    assert linalg.determinant(np.diag([2.0, 3.0])) == pytest.approx(6.0)
    assert linalg.determinant(np.array([[1.0, 2.0], [2.0, 4.0]])) == 0.0
    assert linalg.determinant(linalg.as_matrix([[1, 2], [3, 4]], "rational")) == Fraction(-2)


def test_solve_examples():
    np.testing.assert_allclose(linalg.solve(np.eye(2), [3, 4]), [3, 4])
    np.testing.assert_allclose(linalg.solve(np.array([[2.0, 0], [0, 4.0]]), [2, 8]), [1, 2])
    rng = np.random.default_rng(5)
    m = rng.normal(size=(5, 5)) + 5 * np.eye(5)
    b = rng.normal(size=5)
    assert np.abs(m @ linalg.solve(m, b) - b).max() < 1e-10


def test_solve_matrix_rhs_and_rational():
    m = linalg.as_matrix([[2, 1], [1, 3]], "rational")
    x = linalg.solve(m, [1, 2])
    assert list(x) == [Fraction(1, 5), Fraction(3, 5)]
    X = linalg.solve(np.array([[2.0, 1], [1, 3]]), np.eye(2))
    np.testing.assert_allclose(X, np.linalg.inv([[2, 1], [1, 3]]))


def test_to_fraction_is_exact_binary():
    assert linalg.to_fraction(0.5) == Fraction(1, 2)
    assert linalg.to_fraction(0.1) == Fraction(0.1)
    assert linalg.to_fraction("2/3") == Fraction(2, 3)


def test_as_matrix_rejects_bad_mode():
    with pytest.raises(ValueError):
        linalg.as_matrix([[1]], "complex")


@given(st.integers(1, 6), st.integers(0, 2**32 - 1))
def test_inverse_and_determinant_properties(n, seed):
    m = np.random.default_rng(seed).normal(size=(n, n)) + 3 * np.eye(n)
    inv = linalg.invert(m)
    assert linalg.inf_norm(m @ inv - np.eye(n)) < 1e-9 * np.linalg.cond(m)
    d = linalg.determinant(m) * linalg.determinant(inv)
    assert d == pytest.approx(1.0, rel=1e-9)


@given(st.lists(st.lists(st.integers(-5, 5), min_size=3, max_size=3), min_size=3, max_size=3))
def test_rational_product_exact(rows):
    m = linalg.as_matrix(rows, "rational")
    if linalg.determinant(m) == 0:
        return
    inv = linalg.invert(m)
    assert (m.dot(inv) == linalg.identity(3, "rational")).all()
    assert linalg.determinant(m) * linalg.determinant(inv) == 1
