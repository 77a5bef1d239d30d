"""Nondegenerate n-simplices and their basic Lagrange polynomials.

For vertices ``x[0..n]`` the bordered matrix ``A`` has rows ``(x[j], 1)``.
Column ``j`` of ``L = inv(A)`` holds the coefficients of the affine function
``lam_j(x) = a_j . x + L[n, j]`` with ``lam_j(x[k]) = delta_jk``; the values
``lam_j(x)`` are the barycentric coordinates of ``x``.

Facets are indexed from 0 in code: facet ``j`` is the one opposite vertex ``j``.
"""
from __future__ import annotations

import json
import math
import threading
from fractions import Fraction

import numpy as np

from . import linalg
from .errors import DegenerateSimplex, DimensionMismatch, SingularMatrix
from .linalg import Mode

DEGENERACY_EPS = 1e-12


class Simplex:
    """An immutable n-simplex with lazily cached Lagrange coefficients."""

    def __init__(self, vertices, mode: Mode = "float"):
        verts = linalg.as_matrix(vertices, mode)
        n = verts.shape[1]
        if verts.shape[0] != n + 1:
            raise DimensionMismatch(
                f"an {n}-simplex needs {n + 1} vertices, got {verts.shape[0]}"
            )
        verts.setflags(write=False)
        self._vertices = verts
        self._mode = mode
        self._lock = threading.Lock()
        self._coeffs: np.ndarray | None = None
        self._check_nondegenerate()

    def _check_nondegenerate(self) -> None:
        det = linalg.determinant(self.bordered_matrix())
        if self._mode == "rational":
            if det == 0:
                raise DegenerateSimplex("vertices are affinely dependent")
            return
        big = float(np.abs(self._vertices).max())
        if abs(det) < DEGENERACY_EPS * (big + 1.0) ** self.n:
            raise DegenerateSimplex(f"|det A| = {abs(det):.3e} is below threshold")

    @property
    def n(self) -> int:
        return self._vertices.shape[1]

    @property
    def mode(self) -> Mode:
        return self._mode

    @property
    def vertices(self) -> np.ndarray:
        return self._vertices

    def bordered_matrix(self) -> np.ndarray:
        ones = np.ones((self.n + 1, 1), dtype=float)
        if self._mode == "rational":
            ones = linalg.as_matrix(ones, "rational")
        return np.concatenate([self._vertices, ones], axis=1)

    @property
    def coeffs(self) -> np.ndarray:
        """``L = inv(A)``, shape ``(n+1, n+1)``; column j is lam_j."""
        if self._coeffs is None:
            with self._lock:
                if self._coeffs is None:
                    try:
                        L = linalg.invert(self.bordered_matrix())
                    except SingularMatrix as exc:
                        raise DegenerateSimplex(str(exc)) from exc
                    L.setflags(write=False)
                    self._coeffs = L
        return self._coeffs

    @property
    def normals(self) -> np.ndarray:
        """Row j is ``a_j``, the inward normal of facet j (unnormalized)."""
        return self.coeffs[: self.n, :].T

    @property
    def offsets(self) -> np.ndarray:
        """Entry j is ``lam_j(0)``."""
        return self.coeffs[self.n, :]

    def barycentric(self, x) -> np.ndarray:
        """All ``lam_j(x)``. ``x`` may also be a stack of points, shape (m, n)."""
        x = self._coerce_point(x)
        return x @ self.normals.T + self.offsets

    def lagrange_eval(self, j: int, x):
        if not 0 <= j <= self.n:
            raise IndexError(f"facet index {j} out of range 0..{self.n}")
        x = self._coerce_point(x)
        return x @ self.normals[j] + self.offsets[j]

    def _coerce_point(self, x) -> np.ndarray:
        if self._mode == "rational":
            arr = np.array(x, dtype=object)
            arr = np.vectorize(linalg.to_fraction, otypes=[object])(arr)
        else:
            arr = np.asarray(x, dtype=float)
        if arr.shape[-1] != self.n:
            raise DimensionMismatch(f"point of dimension {arr.shape[-1]}, simplex has n={self.n}")
        return arr

    def contains(self, x, tol: float = 1e-12) -> bool:
        return bool(np.all(self.barycentric(x) >= -tol))

    def volume(self):
        det = linalg.determinant(self.bordered_matrix())
        return abs(det) / math.factorial(self.n)

    def centroid(self) -> np.ndarray:
        if self._mode == "rational":
            return self._vertices.sum(axis=0) / Fraction(self.n + 1)
        return self._vertices.mean(axis=0)

    def dilate(self, tau) -> "Simplex":
        """Homothety with ratio ``tau`` about the centroid."""
        if tau == 0:
            raise DegenerateSimplex("dilation by zero")
        if self._mode == "rational":
            tau = linalg.to_fraction(tau)
        c = self.centroid()
        return Simplex(c + tau * (self._vertices - c), self._mode)

    def translate(self, v) -> "Simplex":
        return Simplex(self._vertices + self._coerce_point(v), self._mode)

    def to_float(self) -> "Simplex":
        if self._mode == "float":
            return self
        return Simplex(self._vertices.astype(float), "float")

    def __repr__(self) -> str:
        return f"Simplex(n={self.n}, mode={self._mode!r}, vertices={self._vertices.tolist()!r})"

    def __eq__(self, other) -> bool:
        if not isinstance(other, Simplex):
            return NotImplemented
        return self._mode == other._mode and np.array_equal(self._vertices, other._vertices)

    __hash__ = None


def make_simplex(vertices, mode: Mode = "float") -> Simplex:
    return Simplex(vertices, mode)


# -- JSON ---------------------------------------------------------------

def _scalar_to_json(v):
    if isinstance(v, Fraction):
        return int(v) if v.denominator == 1 else f"{v.numerator}/{v.denominator}"
    return float(v)


def simplex_to_dict(s: Simplex) -> dict:
    return {"dim": s.n, "vertices": [[_scalar_to_json(v) for v in row] for row in s.vertices]}


def simplex_from_dict(data: dict, mode: Mode = "float") -> Simplex:
    """Parse ``{"dim": n, "vertices": [[...], ...]}``.

    In rational mode entries may be ints, decimal strings or ``"p/q"``
    strings; floats are taken at their exact binary value.
    """
    try:
        verts = data["vertices"]
    except (KeyError, TypeError) as exc:
        raise ValueError("simplex JSON needs a 'vertices' array") from exc
    if not isinstance(verts, list) or not verts or not all(isinstance(r, list) for r in verts):
        raise ValueError("'vertices' must be a non-empty list of coordinate lists")
    lengths = {len(r) for r in verts}
    if len(lengths) != 1:
        raise DimensionMismatch("vertices have differing lengths")
    if mode == "float":
        verts = [[float(Fraction(v)) if isinstance(v, str) else v for v in r] for r in verts]
    dim = data.get("dim")
    n = lengths.pop()
    if dim is not None and dim != n:
        raise DimensionMismatch(f"'dim' is {dim} but vertices have {n} coordinates")
    return Simplex(verts, mode)


def dumps_simplex(s: Simplex) -> str:
    return json.dumps(simplex_to_dict(s))


def loads_simplex(text: str, mode: Mode = "float") -> Simplex:
    return simplex_from_dict(json.loads(text), mode)
