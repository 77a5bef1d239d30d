"""Convex bodies given by their support functions.

Two families are supported: Euclidean balls ``B(center; radius)`` and
axis-aligned cubes ``origin + side * [0,1]^n``. The unit cube ``Q_n`` and
the symmetric cube ``[-1,1]^n`` are the named members of the second family.
Both families are closed under translation and positive scaling about the
origin.

Because ``lam_j(x) = a_j . x + lam_j(0)``, the maximum of ``-lam_j`` over a
body is ``h(-a_j) - lam_j(0)`` where ``h`` is the support function.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Literal

import numpy as np

from . import linalg
from .errors import DimensionMismatch, DimensionTooLarge
from .simplex import Simplex

Kind = Literal["ball", "cube"]


@dataclass(frozen=True, eq=False)
class ConvexBody:
    kind: Kind
    center: np.ndarray          # ball center, or the cube's lowest corner
    radius: float | Fraction    # ball radius, or the cube's side length

    def __post_init__(self):
        if self.kind not in ("ball", "cube"):
            raise ValueError(f"unknown body kind {self.kind!r}")
        if not self.radius > 0:
            raise ValueError("radius / side must be positive")
        if np.ndim(self.center) != 1 or len(self.center) < 1:
            raise ValueError("center must be a non-empty vector")

    @property
    def n(self) -> int:
        return len(self.center)

    @property
    def name(self) -> str:
        if self.kind == "ball":
            return "ball"
        if np.all(self.center == 0) and self.radius == 1:
            return "unit_cube"
        if np.all(self.center == -1) and self.radius == 2:
            return "sym_cube"
        return "cube"

    def __eq__(self, other):
        if not isinstance(other, ConvexBody):
            return NotImplemented
        return (self.kind == other.kind and self.radius == other.radius
                and np.array_equal(self.center, other.center))

    __hash__ = None

    def support(self, u):
        """``h(u) = max_{x in C} u . x``."""
        u = self._check(u)
        if self.kind == "ball":
            uf = np.asarray(u, dtype=float)
            return float(uf @ np.asarray(self.center, dtype=float)) + float(self.radius) * float(np.linalg.norm(uf))
        pos = np.where(u > 0, u, 0 * u)
        return u @ self.center + self.radius * pos.sum()

    def argmax(self, u) -> np.ndarray:
        """A point of the body attaining ``support(u)``."""
        u = self._check(u)
        if self.kind == "ball":
            uf = np.asarray(u, dtype=float)
            c = np.asarray(self.center, dtype=float)
            norm = np.linalg.norm(uf)
            return c.copy() if norm == 0 else c + float(self.radius) * uf / norm
        return self.center + self.radius * np.where(u > 0, 1, 0)

    def contains(self, x, tol: float = 1e-12) -> bool:
        x = np.asarray(x, dtype=float)
        c = np.asarray(self.center, dtype=float)
        rho = float(self.radius)
        if self.kind == "ball":
            return bool(np.linalg.norm(x - c) <= rho + tol)
        return bool(np.all(x >= c - tol) and np.all(x <= c + rho + tol))

    def translate(self, v) -> "ConvexBody":
        return ConvexBody(self.kind, self.center + np.asarray(v, dtype=self.center.dtype), self.radius)

    def scale(self, tau) -> "ConvexBody":
        """Image under ``x -> tau * x`` for ``tau > 0``."""
        if not tau > 0:
            raise ValueError("scale factor must be positive")
        return ConvexBody(self.kind, self.center * tau, self.radius * tau)

    def vertices(self) -> np.ndarray:
        """All ``2**n`` corners of a cube body, shape ``(2**n, n)``."""
        if self.kind != "cube":
            raise ValueError("only cubes have vertices")
        if self.n > 20:
            raise DimensionTooLarge("cube vertex enumeration limited to n <= 20")
        bits = np.array(list(itertools.product((0, 1), repeat=self.n)), dtype=int)
        return self.center + self.radius * bits

    def _check(self, u) -> np.ndarray:
        u = np.asarray(u, dtype=self.center.dtype)
        if u.shape != (self.n,):
            raise DimensionMismatch(f"vector of shape {u.shape} for a body in dimension {self.n}")
        return u

    def to_dict(self) -> dict:
        name = self.name
        if name in ("unit_cube", "sym_cube"):
            return {"kind": name}
        if name == "ball":
            return {"kind": "ball", "center": [float(v) for v in self.center], "radius": float(self.radius)}
        return {"kind": "cube", "origin": [float(v) for v in self.center], "side": float(self.radius)}


def ball(center, radius=1.0) -> ConvexBody:
    return ConvexBody("ball", np.asarray(center, dtype=float), float(radius))


def unit_ball(n: int) -> ConvexBody:
    return ball(np.zeros(n), 1.0)


def unit_cube(n: int, mode: linalg.Mode = "float") -> ConvexBody:
    if mode == "rational":
        return ConvexBody("cube", np.array([Fraction(0)] * n, dtype=object), Fraction(1))
    return ConvexBody("cube", np.zeros(n), 1.0)


def sym_cube(n: int, mode: linalg.Mode = "float") -> ConvexBody:
    if mode == "rational":
        return ConvexBody("cube", np.array([Fraction(-1)] * n, dtype=object), Fraction(2))
    return ConvexBody("cube", -np.ones(n), 2.0)


def body_from_dict(data: dict, n: int | None = None, mode: linalg.Mode = "float") -> ConvexBody:
    """Parse a body descriptor.

    ``{"kind": "ball", "center": [...], "radius": r}``, ``{"kind": "unit_cube"}``,
    ``{"kind": "sym_cube"}`` or ``{"kind": "cube", "origin": [...], "side": s}``.
    Cubes take their dimension from ``"dim"`` (alias ``"n"``) or from ``n``.
    """
    kind = data.get("kind")
    if "dim" not in data and "n" in data:
        data = {**data, "dim": data["n"]}
    if kind == "ball":
        if "center" not in data:
            if n is None and "dim" not in data:
                raise ValueError("ball descriptor needs 'center' or 'dim'")
            center = np.zeros(data.get("dim", n))
        else:
            center = data["center"]
        return ball(center, data.get("radius", 1.0))
    if kind in ("unit_cube", "sym_cube", "cube"):
        dim = data.get("dim", n)
        if kind == "cube":
            origin = np.array(data["origin"], dtype=float)
            if mode == "rational":
                origin = np.array([linalg.to_fraction(v) for v in data["origin"]], dtype=object)
            side = linalg.to_fraction(data["side"]) if mode == "rational" else float(data["side"])
            return ConvexBody("cube", origin, side)
        if dim is None:
            raise ValueError(f"{kind} descriptor needs a dimension")
        return unit_cube(dim, mode) if kind == "unit_cube" else sym_cube(dim, mode)
    raise ValueError(f"unknown body kind {kind!r}")


def neg_lambda_maxima(body: ConvexBody, s: Simplex) -> tuple[np.ndarray, np.ndarray]:
    """``m_j = max_{x in C} -lam_j(x)`` for every facet, with maximizing points.

    Returns ``(m, X)`` where row j of ``X`` attains ``m[j]``. Cube bodies
    paired with a rational simplex (or a rational cube) stay exact.
    """
    if body.n != s.n:
        raise DimensionMismatch(f"body in dimension {body.n}, simplex in {s.n}")
    U = -s.normals                              # row j is -a_j
    off = s.offsets
    if body.kind == "ball":
        U = np.asarray(U, dtype=float)
        c = np.asarray(body.center, dtype=float)
        rho = float(body.radius)
        norms = np.linalg.norm(U, axis=1)
        m = U @ c + rho * norms - np.asarray(off, dtype=float)
        return m, c + rho * U / norms[:, None]
    if s.mode == "rational" or body.center.dtype == object:
        frac = np.vectorize(linalg.to_fraction, otypes=[object])
        U, off = frac(U), frac(off)
        origin = frac(body.center)
        side = linalg.to_fraction(body.radius)
    else:
        origin, side = body.center, body.radius
    pos = U > 0
    m = U @ origin + side * np.where(pos, U, 0 * U).sum(axis=1) - off
    return m, origin + side * pos.astype(int)


def max_neg_lambda(body: ConvexBody, s: Simplex, j: int):
    """``max_{x in C} -lam_j(x)`` and a maximizing point, for one facet."""
    m, X = neg_lambda_maxima(body, s)
    return m[j], X[j]
