"""Named simplices: standard, regular inscribed, Hadamard, and random ones."""
from __future__ import annotations

import math

import numpy as np

from . import linalg, metrics
from .errors import DegenerateSimplex, GenerationFailed, UnsupportedOrder
from .simplex import Simplex

RANDOM_SCHEMES = ("gaussian", "in_ball", "in_cube", "unit_cube_vertices")
MAX_RETRIES = 100


def standard_simplex(n: int, mode: linalg.Mode = "float") -> Simplex:
    """Vertices ``0, e_1, ..., e_n`` (origin first)."""
    if n < 1:
        raise ValueError("n must be at least 1")
    verts = np.vstack([np.zeros((1, n), dtype=int), np.eye(n, dtype=int)])
    return Simplex(verts, mode)


def regular_inscribed_simplex(n: int) -> Simplex:
    """Regular simplex with all vertices on the unit sphere, centroid at 0.

    The vertices ``e_j`` of ``R^{n+1}``, centered, are written in the
    orthonormal Helmert basis of the hyperplane ``sum x = 0`` and rescaled
    to unit length. Deterministic, so results reproduce bit-for-bit.
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    helmert = np.zeros((n, n + 1))
    for k in range(1, n + 1):
        helmert[k - 1, :k] = -1.0
        helmert[k - 1, k] = k
        helmert[k - 1] /= math.sqrt(k * (k + 1))
    centered = np.eye(n + 1) - 1.0 / (n + 1)
    verts = centered @ helmert.T * math.sqrt((n + 1) / n)
    return Simplex(verts)


# -- Hadamard matrices ----------------------------------------------------

def _is_prime(q: int) -> bool:
    if q < 2:
        return False
    return all(q % p for p in range(2, math.isqrt(q) + 1))


def _sylvester(m: int) -> np.ndarray:
    h = np.array([[1]], dtype=np.int64)
    while h.shape[0] < m:
        h = np.block([[h, h], [h, -h]])
    return h


def _paley_one(q: int) -> np.ndarray:
    """Paley construction I, order ``q + 1`` for a prime ``q = 3 mod 4``."""
    residues = {(k * k) % q for k in range(1, q)}
    chi = np.array([0] + [1 if a in residues else -1 for a in range(1, q)], dtype=np.int64)
    idx = np.arange(q)
    jacobsthal = chi[(idx[None, :] - idx[:, None]) % q]
    s = np.zeros((q + 1, q + 1), dtype=np.int64)
    s[0, 1:] = 1
    s[1:, 0] = -1
    s[1:, 1:] = jacobsthal
    return s + np.eye(q + 1, dtype=np.int64)


def is_hadamard(h: np.ndarray) -> bool:
    m = h.shape[0]
    return bool(np.all(np.abs(h) == 1) and np.array_equal(h @ h.T, m * np.eye(m, dtype=np.int64)))


def hadamard(m: int) -> np.ndarray:
    """A Hadamard matrix of order ``m`` (Sylvester, else Paley I)."""
    if m >= 1 and m & (m - 1) == 0:
        h = _sylvester(m)
    elif m > 2 and _is_prime(m - 1) and (m - 1) % 4 == 3:
        h = _paley_one(m - 1)
    else:
        raise UnsupportedOrder(f"no Sylvester or Paley I Hadamard matrix of order {m}")
    if not is_hadamard(h):
        raise AssertionError(f"constructed matrix of order {m} failed H H^T = m I")
    return h


def hadamard_simplex(n: int, mode: linalg.Mode = "float") -> Simplex:
    """Regular simplex on vertices of ``[0,1]^n`` built from ``hadamard(n+1)``.

    Rows are negated so the last column is all ones; that column is dropped
    and entries ``-1`` become ``0``.
    """
    h = hadamard(n + 1)
    h = h * h[:, -1:]
    verts = (h[:, :-1] + 1) // 2
    s = Simplex(verts, mode)
    if not metrics.is_regular(s, 1e-12):
        raise AssertionError("Hadamard rows did not give a regular simplex")
    return s


# -- random simplices -----------------------------------------------------

def _normalize_into_ball(verts: np.ndarray) -> np.ndarray:
    R, c = metrics.circumball(Simplex(verts))
    return (verts - c) / R


def random_simplex(n: int, seed: int | None = None, scheme: str = "gaussian",
                   rng: np.random.Generator | None = None) -> Simplex:
    """Seeded random nondegenerate simplex.

    Schemes: ``gaussian`` (standard normal vertices), ``in_ball`` (uniform in
    the unit ball, then recentred and rescaled so the smallest enclosing ball
    is the unit ball), ``in_cube`` (uniform in ``[0,1]^n``) and
    ``unit_cube_vertices`` (distinct corners of ``[0,1]^n``).
    """
    if scheme not in RANDOM_SCHEMES:
        raise ValueError(f"unknown scheme {scheme!r}; expected one of {RANDOM_SCHEMES}")
    if n < 1:
        raise ValueError("n must be at least 1")
    rng = rng if rng is not None else np.random.default_rng(seed)
    for _ in range(MAX_RETRIES):
        if scheme == "gaussian":
            verts = rng.standard_normal((n + 1, n))
        elif scheme == "in_cube":
            verts = rng.random((n + 1, n))
        elif scheme == "unit_cube_vertices":
            if n + 1 > 2 ** n:
                raise GenerationFailed(f"[0,1]^{n} has fewer than {n + 1} corners")
            codes = rng.choice(2 ** n, size=n + 1, replace=False)
            verts = ((codes[:, None] >> np.arange(n)) & 1).astype(float)
        else:
            g = rng.standard_normal((n + 1, n))
            radii = rng.random(n + 1) ** (1.0 / n)
            verts = g / np.linalg.norm(g, axis=1, keepdims=True) * radii[:, None]
        try:
            s = Simplex(verts)
            if scheme == "in_ball":
                s = Simplex(_normalize_into_ball(verts))
            return s
        except DegenerateSimplex:
            continue
    raise GenerationFailed(f"no nondegenerate {scheme} simplex after {MAX_RETRIES} draws")
