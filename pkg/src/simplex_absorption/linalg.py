"""Small dense linear algebra in two scalar modes.

Float mode works on ``float64`` arrays. Rational mode works on object
arrays of :class:`fractions.Fraction` and is exact. Both share the same
elimination code; only the pivot test differs.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Literal

import numpy as np

from .errors import SingularMatrix

Mode = Literal["float", "rational"]
MODES = ("float", "rational")

PIVOT_EPS = 1e-12


def to_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (int, np.integer)):
        return Fraction(int(x))
    if isinstance(x, str):
        return Fraction(x)
    # floats are converted exactly (binary value), never rounded to decimals
    return Fraction(float(x))


def as_matrix(data, mode: Mode = "float") -> np.ndarray:
    """Coerce ``data`` to a 2-d array in the requested scalar mode."""
    if mode == "float":
        m = np.array(data, dtype=float)
    elif mode == "rational":
        m = np.array(data, dtype=object)
        m = np.vectorize(to_fraction, otypes=[object])(m) if m.size else m
    else:
        raise ValueError(f"unknown scalar mode {mode!r}")
    if m.ndim == 1:
        m = m.reshape(1, -1)
    if m.ndim != 2 or m.shape[0] < 1 or m.shape[1] < 1:
        raise ValueError(f"expected a non-empty 2-d matrix, got shape {m.shape}")
    return m


def mode_of(m: np.ndarray) -> Mode:
    return "rational" if m.dtype == object else "float"


def identity(n: int, mode: Mode = "float") -> np.ndarray:
    if mode == "float":
        return np.eye(n)
    eye = np.full((n, n), Fraction(0), dtype=object)
    for i in range(n):
        eye[i, i] = Fraction(1)
    return eye


def _require_square(m) -> np.ndarray:
    m = np.asarray(m)
    if m.dtype != object:
        m = m.astype(float)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise ValueError(f"square matrix required, got shape {m.shape}")
    return m


def _eliminate(aug: np.ndarray, n: int) -> np.ndarray:
    """Gauss-Jordan on the augmented block ``aug`` (n rows), in place.

    Float mode uses scaled partial pivoting: each row's pivot candidate is
    compared relative to that row's largest entry in the left block, and
    a relative pivot below ``PIVOT_EPS`` means singular.
    """
    exact = aug.dtype == object
    if not exact:
        scale = np.abs(aug[:, :n]).max(axis=1)
        if np.any(scale == 0):
            raise SingularMatrix("matrix has a zero row")
    for col in range(n):
        if exact:
            piv = next((r for r in range(col, n) if aug[r, col] != 0), None)
            if piv is None:
                raise SingularMatrix(f"zero pivot in column {col}")
        else:
            ratios = np.abs(aug[col:, col]) / scale[col:]
            piv = col + int(np.argmax(ratios))
            if ratios[piv - col] < PIVOT_EPS:
                raise SingularMatrix(
                    f"pivot {ratios[piv - col]:.3e} below {PIVOT_EPS} in column {col}"
                )
        if piv != col:
            aug[[col, piv]] = aug[[piv, col]]
            if not exact:
                scale[[col, piv]] = scale[[piv, col]]
        aug[col] = aug[col] / aug[col, col]
        factors = aug[:, col].copy()
        factors[col] = 0
        aug -= np.outer(factors, aug[col])
    return aug


def invert(m: np.ndarray) -> np.ndarray:
    """Inverse of a square matrix; raises :class:`SingularMatrix`."""
    m = _require_square(m)
    n = m.shape[0]
    aug = np.concatenate([m, identity(n, mode_of(m))], axis=1)
    return _eliminate(aug, n)[:, n:].copy()


def solve(m: np.ndarray, b) -> np.ndarray:
    """Solve ``m @ x = b`` for a vector or a matrix of right-hand sides."""
    m = _require_square(m)
    n = m.shape[0]
    rhs = np.asarray(b, dtype=m.dtype)
    if m.dtype == object:
        rhs = np.vectorize(to_fraction, otypes=[object])(rhs)
    vector = rhs.ndim == 1
    rhs = rhs.reshape(n, -1)
    aug = np.concatenate([m.copy(), rhs], axis=1)
    x = _eliminate(aug, n)[:, n:]
    return x[:, 0].copy() if vector else x.copy()


def determinant(m: np.ndarray):
    """Determinant by elimination. Never raises on singular input."""
    m = _require_square(m)
    n = m.shape[0]
    a = m.copy()
    exact = a.dtype == object
    det = Fraction(1) if exact else 1.0
    for col in range(n):
        if exact:
            piv = next((r for r in range(col, n) if a[r, col] != 0), None)
            if piv is None:
                return Fraction(0)
        else:
            piv = col + int(np.argmax(np.abs(a[col:, col])))
            if a[piv, col] == 0.0:
                return 0.0
        if piv != col:
            a[[col, piv]] = a[[piv, col]]
            det = -det
        p = a[col, col]
        det = det * p
        if col + 1 < n:
            a[col + 1:, col:] -= np.outer(a[col + 1:, col] / p, a[col, col:])
    return det


def inf_norm(m: np.ndarray) -> float:
    """Max-row-sum norm, returned as a float in either mode."""
    m = np.atleast_2d(m)
    return float(max(sum(abs(float(v)) for v in row) for row in m))
