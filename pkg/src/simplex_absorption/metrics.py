"""Metric quantities of a simplex read off its Lagrange coefficients.

Everything here is returned in float, also for rational simplices: the
closed forms involve square roots of sums of squared coefficients.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

import numpy as np

from . import linalg
from .errors import DimensionTooLarge
from .simplex import Simplex

CIRCUMBALL_MAX_DIM = 20
REGULAR_TOL = 1e-9


def _float_normals(s: Simplex) -> np.ndarray:
    return np.asarray(s.normals, dtype=float)


def normal_lengths(s: Simplex) -> np.ndarray:
    """``||a_j||`` for each facet j."""
    return np.linalg.norm(_float_normals(s), axis=1)


def heights(s: Simplex) -> np.ndarray:
    """Height from vertex j onto facet j, ``1 / ||a_j||``."""
    return 1.0 / normal_lengths(s)


def axial_diameters(s: Simplex) -> np.ndarray:
    """Longest axis-parallel chord per coordinate: ``d_i = 2 / sum_j |l_ij|``."""
    L = np.asarray(s.coeffs[: s.n, :], dtype=float)
    return 2.0 / np.abs(L).sum(axis=1)


def inradius_incenter(s: Simplex) -> tuple[float, np.ndarray]:
    norms = normal_lengths(s)
    r = 1.0 / norms.sum()
    z = r * (norms @ np.asarray(s.vertices, dtype=float))
    return float(r), z


def tangent_points(s: Simplex) -> np.ndarray:
    """Row k is where the inscribed ball touches facet k."""
    r, z = inradius_incenter(s)
    a = _float_normals(s)
    norms = np.linalg.norm(a, axis=1)
    return z - (r / norms)[:, None] * a


def facet_measures(s: Simplex) -> np.ndarray:
    """(n-1)-dimensional measure of each facet via a Gram determinant."""
    n = s.n
    if n == 1:
        return np.ones(2)
    verts = np.asarray(s.vertices, dtype=float)
    out = np.empty(n + 1)
    for j in range(n + 1):
        face = np.delete(verts, j, axis=0)
        edges = (face[1:] - face[0]).T
        gram = edges.T @ edges
        out[j] = math.sqrt(max(linalg.determinant(gram), 0.0)) / math.factorial(n - 1)
    return out


def _subset_ball(pts: np.ndarray) -> tuple[np.ndarray, float, np.ndarray]:
    """Circumsphere of affinely independent ``pts`` within their affine hull.

    Returns (center, radius, weights) where ``center = weights @ pts`` and the
    weights sum to one.
    """
    if len(pts) == 1:
        return pts[0].copy(), 0.0, np.ones(1)
    base = pts[0]
    edges = pts[1:] - base
    gram = edges @ edges.T
    rhs = 0.5 * np.einsum("ij,ij->i", edges, edges)
    mu = linalg.solve(gram, rhs)
    center = base + mu @ edges
    weights = np.concatenate([[1.0 - mu.sum()], mu])
    return center, float(np.linalg.norm(center - base)), weights


def circumball(s: Simplex, tol: float = 1e-10) -> tuple[float, np.ndarray]:
    """Smallest ball containing the simplex, as (radius, center).

    Vertex subsets are scanned and the first ball certified optimal is
    returned: center inside the subset's convex hull, every subset point
    on the sphere and every vertex inside it. Those conditions are
    sufficient for the (unique) minimal ball.
    """
    n = s.n
    if n > CIRCUMBALL_MAX_DIM:
        raise DimensionTooLarge(f"circumball enumeration limited to n <= {CIRCUMBALL_MAX_DIM}")
    verts = np.asarray(s.vertices, dtype=float)
    scale = float(np.abs(verts).max()) + 1.0
    best: tuple[float, np.ndarray] | None = None
    for size in range(n + 1, 1, -1):
        for idx in itertools.combinations(range(n + 1), size):
            center, radius, weights = _subset_ball(verts[list(idx)])
            if weights.min() < -tol:
                continue
            far = np.linalg.norm(verts - center, axis=1).max()
            if far <= radius + tol * scale:
                return radius, center
            if best is None or far < best[0]:
                best = (far, center)
    # unreachable for a nondegenerate simplex; keep the best enclosing ball seen
    assert best is not None
    return best


def euler_check(s: Simplex) -> tuple[float, float, float]:
    """``(R, n*r, R - n*r)``; the gap is nonnegative, zero only for regular simplices."""
    R, _ = circumball(s)
    r, _ = inradius_incenter(s)
    return R, s.n * r, R - s.n * r


def pairwise_distances(s: Simplex) -> np.ndarray:
    verts = np.asarray(s.vertices, dtype=float)
    i, j = np.triu_indices(s.n + 1, k=1)
    return np.linalg.norm(verts[i] - verts[j], axis=1)


def is_regular(s: Simplex, tol: float = REGULAR_TOL) -> bool:
    d = pairwise_distances(s)
    return bool(d.max() - d.min() <= tol * d.max())


@dataclass(frozen=True)
class SimplexMetrics:
    n: int
    volume: float
    heights: np.ndarray
    axial_diameters: np.ndarray
    inradius: float
    incenter: np.ndarray
    tangent_points: np.ndarray
    circumradius: float
    circumcenter: np.ndarray
    facet_measures: np.ndarray
    surface: float
    euler_gap: float
    regular: bool

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "volume": self.volume,
            "heights": self.heights.tolist(),
            "axial_diameters": self.axial_diameters.tolist(),
            "inradius": self.inradius,
            "incenter": self.incenter.tolist(),
            "tangent_points": self.tangent_points.tolist(),
            "circumradius": self.circumradius,
            "circumcenter": self.circumcenter.tolist(),
            "facet_measures": self.facet_measures.tolist(),
            "surface": self.surface,
            "euler_gap": self.euler_gap,
            "regular": self.regular,
        }


def compute_metrics(s: Simplex, regular_tol: float = REGULAR_TOL) -> SimplexMetrics:
    r, z = inradius_incenter(s)
    R, c = circumball(s)
    sig = facet_measures(s)
    return SimplexMetrics(
        n=s.n,
        volume=float(s.volume()),
        heights=heights(s),
        axial_diameters=axial_diameters(s),
        inradius=r,
        incenter=z,
        tangent_points=tangent_points(s),
        circumradius=R,
        circumcenter=c,
        facet_measures=sig,
        surface=float(sig.sum()),
        euler_gap=R - s.n * r,
        regular=is_regular(s, regular_tol),
    )
